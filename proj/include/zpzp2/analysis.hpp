#pragma once

#include <cstdint>
#include <vector>

#include "zpzp2/code.hpp"
#include "zpzp2/gray.hpp"

namespace zpzp2 {

enum class RankMethod { kAuto, kSpanElimination, kBruteForce };
enum class KernelMethod { kAuto, kCoset, kBruteForce };

struct RankReport {
    int rank = 0;
    int rank_excess = 0;  // rank - (gamma + 2*delta)
    RankMethod method = RankMethod::kAuto;
    // Words whose Gray images contributed the pivots (size == rank).
    std::vector<MixedWord> span_generators;
};

struct KernelReport {
    int kernel_dim = 0;
    int kernel_deficit = 0;  // (gamma + 2*delta) - kernel_dim
    KernelMethod method = KernelMethod::kAuto;
    // Coefficient tuples a in Z_p^delta whose representative sum(a_j v_j)
    // lands in the kernel (lexicographically sorted). Only the coset method
    // fills this in.
    std::vector<std::vector<std::uint8_t>> coset_exponents;
};

// Dimension over Z_p of the linear span of the Gray image.
// kSpanElimination (p = 3 only) eliminates Gray images of the closed
// generator family {u_i} u {v_j} u {3 v_k*v_l} u {3 v_x*v_y*v_z};
// kBruteForce eliminates the Gray image of every codeword. kAuto picks
// span elimination at p = 3 and brute force otherwise.
RankReport compute_rank(const AdditiveCode& c, RankMethod method = RankMethod::kAuto,
                        std::uint64_t cap = kDefaultEnumerationCap);

// The Theorem-style spanning family for p = 3, in the order u rows, v rows,
// doubled pair products 3 v_k*v_l (l <= k), triple products 3 v_x*v_y*v_z
// (x <= y <= z).
std::vector<MixedWord> cubic_span_generators(const AdditiveCode& c);

// Additive code whose Gray image is the linear span <big_phi(C)> (p = 3):
// generated by the cubic span family; type (alpha, beta;
// gamma + rank_excess, delta; kappa).
AdditiveCode span_code(const AdditiveCode& c);

// Kernel dimension of big_phi(C): the Z_p-dimension of
// K = {g in big_phi(C) : g + big_phi(C) = big_phi(C)}.
// kCoset sweeps the p^delta representatives sum(a_j v_j) and tests each
// against every codeword; kBruteForce tests every codeword as a kernel
// candidate from the definition. kAuto picks the coset method.
KernelReport compute_kernel(const AdditiveCode& c, KernelMethod method = KernelMethod::kAuto,
                            std::uint64_t cap = kDefaultEnumerationCap);

// Additive preimage of the kernel: type (alpha, beta; gamma + k, delta - k;
// kappa) where k is the kernel deficit.
AdditiveCode kernel_code(const AdditiveCode& c, KernelMethod method = KernelMethod::kAuto,
                         std::uint64_t cap = kDefaultEnumerationCap);

// True when big_phi(C) is a linear subspace of Z_p^n: checked by the carry
// criterion carry_correction(u, v) in C for all codeword pairs (via the
// kernel for large codes).
bool is_gray_linear(const AdditiveCode& c, std::uint64_t cap = kDefaultEnumerationCap);

// Verifies that the kernel cosets found by the coset method partition the
// Gray image: sizes add up and distinct representatives never collide.
bool check_coset_decomposition(const AdditiveCode& c, const KernelReport& report,
                               std::uint64_t cap = kDefaultEnumerationCap);

// Minimum Hamming weight of big_phi(C) \ {0} (equals the minimum
// homogeneous-type weight of C \ {0} since big_phi is an isometry).
long long min_hamming_distance(const AdditiveCode& c,
                               std::uint64_t cap = kDefaultEnumerationCap);

const char* rank_method_name(RankMethod m);
const char* kernel_method_name(KernelMethod m);

}  // namespace zpzp2
