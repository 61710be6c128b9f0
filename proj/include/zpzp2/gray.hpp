#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zpzp2/word.hpp"

namespace zpzp2 {

// A vector over Z_p, entry values in [0, p).
using GrayWord = std::vector<std::uint8_t>;

// Gray image of theta = hi*p + lo: the length-p vector whose i-th entry is
// (hi + lo*i) mod p. It is a bijection onto the arithmetic progressions
// of Z_p^p with common difference lo.
GrayWord phi(Prime p, int theta);

// Inverse of phi; throws std::invalid_argument when g is not a phi image
// (wrong length or not an arithmetic progression).
int phi_inverse(Prime p, std::span<const std::uint8_t> g);

// Extension to mixed words: (x | y) -> (x, phi(y_1), ..., phi(y_beta)),
// length alpha + p*beta.
GrayWord big_phi(const MixedWord& w);
MixedWord big_phi_inverse(Prime p, std::span<const std::uint8_t> g, Shape shape);

// Homogeneous weight on Z_{p^2}: 0 at 0, p on the other multiples of p,
// p-1 elsewhere. Under phi it matches Hamming weight on Z_p^p.
int hom_weight(Prime p, int theta);
long long hom_distance(Prime p, std::span<const std::uint16_t> a,
                       std::span<const std::uint16_t> b);

// Hamming weight / distance over Z_p vectors.
long long hamming_weight(std::span<const std::uint8_t> g);
long long hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

// Carry indicator of u + v: X part zero; Y entry j is 1 exactly when the
// low digits overflow, lo(u_j) + lo(v_j) >= p.
MixedWord carry_word(const MixedWord& u, const MixedWord& v);

// The order-p correction word t with big_phi(u) + big_phi(v) = big_phi(u + v + t)
// for every pair of ambient words: Y entry j is p*(p-1) * carry_j. Adding t
// inside big_phi is what makes the Gray map "additive up to carries".
MixedWord carry_correction(const MixedWord& u, const MixedWord& v);

}  // namespace zpzp2
