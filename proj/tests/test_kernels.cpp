#include <doctest.h>

#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "zpzp2/kernels.hpp"

using namespace zpzp2;

namespace {

const int kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                       43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::vector<std::uint8_t> random_u8(std::mt19937& rng, std::size_t n, int m) {
    std::vector<std::uint8_t> v(n);
    for (auto& e : v) e = (std::uint8_t)(rng() % m);
    return v;
}

}  // namespace

TEST_CASE("variant registry") {
    CHECK(std::string(kernels::scalar().name) == "scalar");
    auto variants = kernels::available();
    CHECK(!variants.empty());
    CHECK(std::string(variants[0]->name) == "scalar");
    CHECK_FALSE(kernels::select("no-such-backend"));
    // the active variant is always selectable by its own name
    std::string current = kernels::active().name;
    CHECK(kernels::select(current));
}

TEST_CASE("every variant matches scalar bit for bit") {
    const kernels::Ops& ref = kernels::scalar();
    std::mt19937 rng(31);

    for (const kernels::Ops* ops : kernels::available()) {
        CAPTURE(ops->name);

        // add_mod_u8: exhaustive over all residue pairs for a few moduli,
        // with lengths that exercise the vector body and the scalar tail.
        for (int m : {3, 7, 11, 97}) {
            std::vector<std::uint8_t> a, b;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    a.push_back((std::uint8_t)i);
                    b.push_back((std::uint8_t)j);
                }
            std::vector<std::uint8_t> got(a.size()), want(a.size());
            ref.add_mod_u8(a.data(), b.data(), want.data(), a.size(), (std::uint8_t)m);
            ops->add_mod_u8(a.data(), b.data(), got.data(), a.size(), (std::uint8_t)m);
            CHECK(got == want);
            for (std::size_t i = 0; i < a.size(); ++i)
                CHECK(want[i] == (a[i] + b[i]) % m);
        }

        // add_mod_u16: exhaustive for small squares, random for 97^2.
        for (int m : {9, 25, 9409}) {
            std::vector<std::uint16_t> a, b;
            if (m <= 49) {
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        a.push_back((std::uint16_t)i);
                        b.push_back((std::uint16_t)j);
                    }
            } else {
                for (int i = 0; i < 100000; ++i) {
                    a.push_back((std::uint16_t)(rng() % m));
                    b.push_back((std::uint16_t)(rng() % m));
                }
            }
            std::vector<std::uint16_t> got(a.size()), want(a.size());
            ref.add_mod_u16(a.data(), b.data(), want.data(), a.size(), (std::uint16_t)m);
            ops->add_mod_u16(a.data(), b.data(), got.data(), a.size(), (std::uint16_t)m);
            CHECK(got == want);
            for (std::size_t i = 0; i < a.size(); ++i)
                CHECK(want[i] == (a[i] + b[i]) % m);
        }

        // addmul_mod_u8: every (acc, row, s) residue triple for every prime
        // modulus in range (this is what certifies the Barrett reduction).
        for (int m : kPrimes) {
            std::vector<std::uint8_t> acc0, row;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    acc0.push_back((std::uint8_t)i);
                    row.push_back((std::uint8_t)j);
                }
            for (int s = 0; s < m; ++s) {
                std::vector<std::uint8_t> got = acc0, want = acc0;
                ref.addmul_mod_u8(want.data(), row.data(), (std::uint8_t)s, row.size(),
                                  (std::uint8_t)m);
                ops->addmul_mod_u8(got.data(), row.data(), (std::uint8_t)s, row.size(),
                                   (std::uint8_t)m);
                CHECK(got == want);
                for (std::size_t i = 0; i < row.size(); ++i)
                    CHECK(want[i] == (acc0[i] + s * row[i]) % m);
            }
        }

        // carry_mask_u8: exhaustive digit pairs at n=2, then random lengths
        // spanning block boundaries.
        for (int m : {3, 5, 97}) {
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    std::uint8_t a2[2] = {(std::uint8_t)i, (std::uint8_t)j};
                    std::uint8_t b2[2] = {(std::uint8_t)j, (std::uint8_t)i};
                    CHECK(ops->carry_mask_u8(a2, b2, 2, (std::uint8_t)m) ==
                          ref.carry_mask_u8(a2, b2, 2, (std::uint8_t)m));
                }
            for (int trial = 0; trial < 200; ++trial) {
                std::size_t n = 1 + rng() % 64;
                auto a = random_u8(rng, n, m);
                auto b = random_u8(rng, n, m);
                std::uint64_t want = ref.carry_mask_u8(a.data(), b.data(), n, (std::uint8_t)m);
                CHECK(ops->carry_mask_u8(a.data(), b.data(), n, (std::uint8_t)m) == want);
                for (std::size_t i = 0; i < n; ++i)
                    CHECK(((want >> i) & 1) == (a[i] + b[i] >= m ? 1u : 0u));
            }
        }

        // count_nonzero_u8 at assorted sizes including empty and all-zero.
        for (std::size_t n : {0, 1, 31, 32, 33, 100, 1000}) {
            auto a = random_u8(rng, n, 9);
            CHECK(ops->count_nonzero_u8(a.data(), n) == ref.count_nonzero_u8(a.data(), n));
            std::vector<std::uint8_t> zeros(n, 0);
            CHECK(ops->count_nonzero_u8(zeros.data(), n) == 0);
        }
    }
}
