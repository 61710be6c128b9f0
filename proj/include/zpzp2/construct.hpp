#pragma once

#include <cstdint>
#include <vector>

#include "zpzp2/code.hpp"

namespace zpzp2 {

struct IntRange {
    int lo = 0;
    int hi = -1;  // empty when hi < lo
    bool contains(int v) const { return lo <= v && v <= hi; }
    int count() const { return hi < lo ? 0 : hi - lo + 1; }
};

// Columns over Z_9 used by the rank- and kernel-tuning blocks (p = 3).
// For m base rows e_1..e_m:
//   scaled_identity: 2 e_k                    (m columns)
//   pair_sums:       e_k + e_l, k < l          (C(m,2), lexicographic)
//   doubled_pairs:   2 (e_k + e_l), k < l      (C(m,2), lexicographic)
//   mixed_pairs:     e_k + 2 e_l, k < l        (C(m,2), lexicographic)
//   triple_sums:     e_x + e_y + e_z, x<y<z    (C(m,3), lexicographic)
// The pair variant replaces the first doubled_pairs column with the all-2s
// column (the doubled sum of ALL base rows), which is what keeps the
// kernel intact while the rank grows.
struct ColumnDictionary {
    int size = 0;
    std::vector<std::vector<int>> scaled_identity;
    std::vector<std::vector<int>> pair_sums;
    std::vector<std::vector<int>> doubled_pairs;
    std::vector<std::vector<int>> mixed_pairs;
    std::vector<std::vector<int>> triple_sums;

    static ColumnDictionary plain(int m);
    static ColumnDictionary pair_variant(int m);

    // (scaled_identity | pair_sums | doubled_pairs | mixed_pairs |
    //  triple_sums); column count m + 3*C(m,2) + C(m,3).
    std::vector<std::vector<int>> concatenated() const;
};

// Achievable ranks for type (p = 3):
// {gamma+2delta, ..., min(beta+delta+kappa,
//                         gamma+delta+C(delta+1,2)+C(delta+2,3))}.
IntRange rank_range(Prime p, const CodeType& type);

// Achievable kernel dimensions (any odd p): {gamma+delta, ..., gamma+2delta}.
IntRange kernel_range(Prime p, const CodeType& type);

// Achievable ranks for a prescribed kernel dimension (p = 3). With kernel
// deficit kbar = gamma+2delta-kernel_dim: kbar = 0 forces rank gamma+2delta;
// otherwise rank = gamma+2delta+rbar with
// 1 <= rbar <= min(beta-(gamma-kappa)-delta, C(kbar,2)+C(kbar+2,3)).
IntRange pair_rank_range(Prime p, const CodeType& type, int kernel_dim);

// Generator matrices in standard form hitting a prescribed rank (p = 3),
// kernel dimension (any odd p), or both at once (p = 3). Out-of-range
// targets throw std::invalid_argument naming the violated bound.
GeneratorMatrix build_rank_witness(Prime p, const CodeType& type, int rank);
GeneratorMatrix build_kernel_witness(Prime p, const CodeType& type, int kernel_dim);
GeneratorMatrix build_pair_witness(Prime p, const CodeType& type, int rank, int kernel_dim);

// The full (rank, kernel) achievability grid for a type (p = 3): ranks
// ascending, kernel dimensions descending, cell true when the pair is
// constructible.
struct AchievabilityTable {
    CodeType type;
    std::vector<int> ranks;
    std::vector<int> kernel_dims;
    std::vector<std::vector<std::uint8_t>> achievable;  // [kernel][rank]
};

AchievabilityTable achievability_table(Prime p, const CodeType& type);

}  // namespace zpzp2
