#include "zpzp2/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace zpzp2::kernels {

namespace {

// t - m when t >= m, for unsigned byte lanes holding t < 2m.
inline __m256i reduce_once_u8(__m256i t, __m256i vm) {
    __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(t, vm), t);
    return _mm256_sub_epi8(t, _mm256_and_si256(ge, vm));
}

inline __m256i reduce_once_u16(__m256i t, __m256i vm) {
    __m256i ge = _mm256_cmpeq_epi16(_mm256_max_epu16(t, vm), t);
    return _mm256_sub_epi16(t, _mm256_and_si256(ge, vm));
}

void add_mod_u8_avx2(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                     std::size_t n, std::uint8_t m) {
    __m256i vm = _mm256_set1_epi8(static_cast<char>(m));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i t = _mm256_add_epi8(va, vb);  // inputs < m <= 127, no wrap
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), reduce_once_u8(t, vm));
    }
    for (; i < n; ++i) {
        unsigned t = static_cast<unsigned>(a[i]) + b[i];
        out[i] = static_cast<std::uint8_t>(t >= m ? t - m : t);
    }
}

void add_mod_u16_avx2(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out,
                      std::size_t n, std::uint16_t m) {
    __m256i vm = _mm256_set1_epi16(static_cast<short>(m));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i t = _mm256_add_epi16(va, vb);  // inputs < m <= 9409, no wrap
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), reduce_once_u16(t, vm));
    }
    for (; i < n; ++i) {
        unsigned t = static_cast<unsigned>(a[i]) + b[i];
        out[i] = static_cast<std::uint16_t>(t >= m ? t - m : t);
    }
}

// acc + s*row stays below 2^14 (all operands < m <= 127), so the Barrett
// quotient q = (t * floor(2^16/m)) >> 16 is off by at most one and a single
// conditional subtract exactly reduces. test_kernels sweeps every
// (acc, row, s) triple for each modulus in range to pin this down.
void addmul_mod_u8_avx2(std::uint8_t* acc, const std::uint8_t* row, std::uint8_t s,
                        std::size_t n, std::uint8_t m) {
    __m256i vm = _mm256_set1_epi16(m);
    __m256i vinv = _mm256_set1_epi16(static_cast<short>(65536 / m));
    __m256i vs = _mm256_set1_epi16(s);
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i va = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(acc + i)));
        __m256i vr = _mm256_cvtepu8_epi16(_mm_loadu_si128(reinterpret_cast<const __m128i*>(row + i)));
        __m256i t = _mm256_add_epi16(va, _mm256_mullo_epi16(vr, vs));
        __m256i q = _mm256_mulhi_epu16(t, vinv);
        __m256i r = _mm256_sub_epi16(t, _mm256_mullo_epi16(q, vm));
        r = reduce_once_u16(r, vm);
        __m128i packed = _mm_packus_epi16(_mm256_castsi256_si128(r),
                                          _mm256_extracti128_si256(r, 1));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(acc + i), packed);
    }
    for (; i < n; ++i)
        acc[i] = static_cast<std::uint8_t>((acc[i] + s * row[i]) % m);
}

std::uint64_t carry_mask_u8_avx2(const std::uint8_t* a, const std::uint8_t* b,
                                 std::size_t n, std::uint8_t m) {
    __m256i vm = _mm256_set1_epi8(static_cast<char>(m));
    std::uint64_t mask = 0;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i t = _mm256_add_epi8(va, vb);
        __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(t, vm), t);
        mask |= static_cast<std::uint64_t>(
                    static_cast<std::uint32_t>(_mm256_movemask_epi8(ge)))
                << i;
    }
    for (; i < n; ++i)
        if (static_cast<unsigned>(a[i]) + b[i] >= m) mask |= std::uint64_t{1} << i;
    return mask;
}

std::size_t count_nonzero_u8_avx2(const std::uint8_t* a, std::size_t n) {
    __m256i zero = _mm256_setzero_si256();
    std::size_t c = 0, i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        std::uint32_t eq = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(va, zero)));
        c += static_cast<std::size_t>(__builtin_popcount(~eq));
    }
    for (; i < n; ++i) c += a[i] != 0;
    return c;
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops ops = {
        "avx2",
        add_mod_u8_avx2,
        add_mod_u16_avx2,
        addmul_mod_u8_avx2,
        carry_mask_u8_avx2,
        count_nonzero_u8_avx2,
    };
    return &ops;
}

}  // namespace zpzp2::kernels

#else

namespace zpzp2::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace zpzp2::kernels

#endif
