#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace zpzp2::kernels {

// Byte/short modular primitives behind the enumeration, elimination and
// membership sweeps. One scalar reference implementation plus vector
// variants; the active set is chosen once at runtime from CPU features
// (override with env ZPZP2_KERNELS=scalar|avx2). All variants must agree
// bit-for-bit; tests/test_kernels.cpp enforces it.
struct Ops {
    const char* name;

    // out[i] = (a[i] + b[i]) % m, inputs already reduced mod m (m <= 127).
    void (*add_mod_u8)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                       std::size_t n, std::uint8_t m);

    // out[i] = (a[i] + b[i]) % m, inputs reduced, m <= 9409.
    void (*add_mod_u16)(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out,
                        std::size_t n, std::uint16_t m);

    // acc[i] = (acc[i] + s * row[i]) % m, everything reduced, m <= 127.
    void (*addmul_mod_u8)(std::uint8_t* acc, const std::uint8_t* row, std::uint8_t s,
                          std::size_t n, std::uint8_t m);

    // Bit i of the result is set when a[i] + b[i] >= m (n <= 64).
    std::uint64_t (*carry_mask_u8)(const std::uint8_t* a, const std::uint8_t* b,
                                   std::size_t n, std::uint8_t m);

    std::size_t (*count_nonzero_u8)(const std::uint8_t* a, std::size_t n);
};

const Ops& scalar();
const Ops& active();
std::vector<const Ops*> available();

// Force a variant by name; returns false if unknown or unsupported here.
bool select(std::string_view name);

}  // namespace zpzp2::kernels
