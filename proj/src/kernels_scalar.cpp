#include "zpzp2/kernels.hpp"

namespace zpzp2::kernels {

namespace {

void add_mod_u8_scalar(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                       std::size_t n, std::uint8_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        unsigned t = static_cast<unsigned>(a[i]) + b[i];
        out[i] = static_cast<std::uint8_t>(t >= m ? t - m : t);
    }
}

void add_mod_u16_scalar(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out,
                        std::size_t n, std::uint16_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        unsigned t = static_cast<unsigned>(a[i]) + b[i];
        out[i] = static_cast<std::uint16_t>(t >= m ? t - m : t);
    }
}

void addmul_mod_u8_scalar(std::uint8_t* acc, const std::uint8_t* row, std::uint8_t s,
                          std::size_t n, std::uint8_t m) {
    for (std::size_t i = 0; i < n; ++i)
        acc[i] = static_cast<std::uint8_t>((acc[i] + s * row[i]) % m);
}

std::uint64_t carry_mask_u8_scalar(const std::uint8_t* a, const std::uint8_t* b,
                                   std::size_t n, std::uint8_t m) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (static_cast<unsigned>(a[i]) + b[i] >= m) mask |= std::uint64_t{1} << i;
    return mask;
}

std::size_t count_nonzero_u8_scalar(const std::uint8_t* a, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += a[i] != 0;
    return c;
}

}  // namespace

const Ops& scalar() {
    static const Ops ops = {
        "scalar",
        add_mod_u8_scalar,
        add_mod_u16_scalar,
        addmul_mod_u8_scalar,
        carry_mask_u8_scalar,
        count_nonzero_u8_scalar,
    };
    return ops;
}

}  // namespace zpzp2::kernels
