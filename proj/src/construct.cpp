#include "zpzp2/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zpzp2 {

namespace {

int choose2(int n) { return n < 2 ? 0 : n * (n - 1) / 2; }
int choose3(int n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

void require_valid(Prime p, const CodeType& t) {
    (void)p;
    if (!t.satisfies_parameter_conditions())
        throw std::invalid_argument("type does not satisfy the parameter conditions");
}

void require_p3(Prime p) {
    if (p.value() != 3)
        throw std::invalid_argument("this construction is defined for p = 3 only");
}

std::vector<int> zero_col(int m) { return std::vector<int>(m, 0); }

}  // namespace

ColumnDictionary ColumnDictionary::plain(int m) {
    ColumnDictionary d;
    d.size = m;
    for (int k = 0; k < m; ++k) {
        auto col = zero_col(m);
        col[k] = 2;
        d.scaled_identity.push_back(col);
    }
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
            auto col = zero_col(m);
            col[k] = 1;
            col[l] = 1;
            d.pair_sums.push_back(col);
        }
    for (const auto& col : d.pair_sums) {
        std::vector<int> dbl(m);
        for (int i = 0; i < m; ++i) dbl[i] = 2 * col[i];
        d.doubled_pairs.push_back(dbl);
    }
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
            auto col = zero_col(m);
            col[k] = 1;
            col[l] = 2;
            d.mixed_pairs.push_back(col);
        }
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y)
            for (int z = y + 1; z < m; ++z) {
                auto col = zero_col(m);
                col[x] = 1;
                col[y] = 1;
                col[z] = 1;
                d.triple_sums.push_back(col);
            }
    return d;
}

ColumnDictionary ColumnDictionary::pair_variant(int m) {
    ColumnDictionary d = plain(m);
    if (!d.doubled_pairs.empty()) d.doubled_pairs[0] = std::vector<int>(m, 2);
    return d;
}

std::vector<std::vector<int>> ColumnDictionary::concatenated() const {
    std::vector<std::vector<int>> cols;
    cols.insert(cols.end(), scaled_identity.begin(), scaled_identity.end());
    cols.insert(cols.end(), pair_sums.begin(), pair_sums.end());
    cols.insert(cols.end(), doubled_pairs.begin(), doubled_pairs.end());
    cols.insert(cols.end(), mixed_pairs.begin(), mixed_pairs.end());
    cols.insert(cols.end(), triple_sums.begin(), triple_sums.end());
    return cols;
}

IntRange rank_range(Prime p, const CodeType& t) {
    require_p3(p);
    require_valid(p, t);
    int lo = t.gamma + 2 * t.delta;
    int hi = std::min(t.beta + t.delta + t.kappa,
                      t.gamma + t.delta + choose2(t.delta + 1) + choose3(t.delta + 2));
    return {lo, hi};
}

IntRange kernel_range(Prime p, const CodeType& t) {
    require_valid(p, t);
    return {t.gamma + t.delta, t.gamma + 2 * t.delta};
}

IntRange pair_rank_range(Prime p, const CodeType& t, int kernel_dim) {
    require_p3(p);
    require_valid(p, t);
    if (!kernel_range(p, t).contains(kernel_dim))
        throw std::invalid_argument(
            "kernel dimension " + std::to_string(kernel_dim) + " outside {" +
            std::to_string(t.gamma + t.delta) + ",...," +
            std::to_string(t.gamma + 2 * t.delta) + "}");
    int base = t.gamma + 2 * t.delta;
    int kbar = base - kernel_dim;
    if (kbar == 0) return {base, base};
    int s = t.beta - (t.gamma - t.kappa) - t.delta;
    int rbar_hi = std::min(s, choose2(kbar) + choose3(kbar + 2));
    return {base + 1, base + rbar_hi};
}

namespace {

// Standard-form generator matrix with every tunable block zero except S:
//   ( I_k 0 | 0  0  0   )
//   ( 0   0 | 0  pI 0   )
//   ( 0   0 | S  0  I_d )
// s_cols holds the first columns of S (delta rows each); the remaining
// s - |s_cols| columns stay zero.
GeneratorMatrix standard_matrix(Prime p, const CodeType& t,
                                const std::vector<std::vector<int>>& s_cols) {
    int alpha = t.alpha, beta = t.beta;
    int gamma = t.gamma, delta = t.delta, kappa = t.kappa;
    int s = beta - (gamma - kappa) - delta;
    std::vector<MixedWord> rows;
    for (int r = 0; r < kappa; ++r) {
        MixedWord w(p, Shape{alpha, beta});
        w.set_x(r, 1);
        rows.push_back(w);
    }
    for (int r = 0; r < gamma - kappa; ++r) {
        MixedWord w(p, Shape{alpha, beta});
        w.set_y(s + r, p.value());
        rows.push_back(w);
    }
    for (int r = 0; r < delta; ++r) {
        MixedWord w(p, Shape{alpha, beta});
        for (std::size_t j = 0; j < s_cols.size(); ++j)
            w.set_y(static_cast<int>(j), s_cols[j][r]);
        w.set_y(s + (gamma - kappa) + r, 1);
        rows.push_back(w);
    }
    return GeneratorMatrix(p, Shape{alpha, beta}, rows);
}

}  // namespace

GeneratorMatrix build_rank_witness(Prime p, const CodeType& t, int rank) {
    IntRange r = rank_range(p, t);
    if (!r.contains(rank))
        throw std::invalid_argument("rank " + std::to_string(rank) + " outside {" +
                                    std::to_string(r.lo) + ",...," + std::to_string(r.hi) +
                                    "}");
    int rbar = rank - (t.gamma + 2 * t.delta);
    auto cols = ColumnDictionary::plain(t.delta).concatenated();
    cols.resize(rbar);
    return standard_matrix(p, t, cols);
}

GeneratorMatrix build_kernel_witness(Prime p, const CodeType& t, int kernel_dim) {
    IntRange r = kernel_range(p, t);
    if (!r.contains(kernel_dim))
        throw std::invalid_argument("kernel dimension " + std::to_string(kernel_dim) +
                                    " outside {" + std::to_string(r.lo) + ",...," +
                                    std::to_string(r.hi) + "}");
    int kbar = t.gamma + 2 * t.delta - kernel_dim;
    int s = t.beta - (t.gamma - t.kappa) - t.delta;
    if (kbar > 0 && s < 1)
        throw std::invalid_argument(
            "type has no free Y columns to carry a sub-maximal kernel");
    // All-(p-1) entries across the first kbar rows of S force exactly those
    // rows out of the kernel.
    std::vector<std::vector<int>> cols;
    if (kbar > 0) {
        for (int j = 0; j < s; ++j) {
            std::vector<int> col(t.delta, 0);
            for (int i = 0; i < kbar; ++i) col[i] = p.value() - 1;
            cols.push_back(col);
        }
    }
    return standard_matrix(p, t, cols);
}

GeneratorMatrix build_pair_witness(Prime p, const CodeType& t, int rank, int kernel_dim) {
    IntRange kr = kernel_range(p, t);
    if (!kr.contains(kernel_dim))
        throw std::invalid_argument("kernel dimension " + std::to_string(kernel_dim) +
                                    " outside {" + std::to_string(kr.lo) + ",...," +
                                    std::to_string(kr.hi) + "}");
    IntRange rr = pair_rank_range(p, t, kernel_dim);
    if (!rr.contains(rank))
        throw std::invalid_argument("rank " + std::to_string(rank) +
                                    " not achievable with kernel dimension " +
                                    std::to_string(kernel_dim) + "; the range is {" +
                                    std::to_string(rr.lo) + ",...," + std::to_string(rr.hi) +
                                    "}");
    int kbar = t.gamma + 2 * t.delta - kernel_dim;
    int rbar = rank - (t.gamma + 2 * t.delta);
    if (kbar == 0) return standard_matrix(p, t, {});

    // Column sequence: the all-2s column, then the scaled identity, then
    // pair sums, doubled pairs from the second on, mixed pairs and triple
    // sums, all over the first kbar base rows and zero-padded below.
    ColumnDictionary d = ColumnDictionary::pair_variant(kbar);
    std::vector<std::vector<int>> seq;
    seq.push_back(std::vector<int>(kbar, 2));
    seq.insert(seq.end(), d.scaled_identity.begin(), d.scaled_identity.end());
    seq.insert(seq.end(), d.pair_sums.begin(), d.pair_sums.end());
    seq.insert(seq.end(), d.doubled_pairs.begin() + (d.doubled_pairs.empty() ? 0 : 1),
               d.doubled_pairs.end());
    seq.insert(seq.end(), d.mixed_pairs.begin(), d.mixed_pairs.end());
    seq.insert(seq.end(), d.triple_sums.begin(), d.triple_sums.end());
    seq.resize(rbar);
    std::vector<std::vector<int>> cols;
    for (const auto& col : seq) {
        std::vector<int> padded(t.delta, 0);
        for (int i = 0; i < kbar; ++i) padded[i] = col[i];
        cols.push_back(padded);
    }
    return standard_matrix(p, t, cols);
}

AchievabilityTable achievability_table(Prime p, const CodeType& t) {
    require_p3(p);
    require_valid(p, t);
    AchievabilityTable tab;
    tab.type = t;
    IntRange rr = rank_range(p, t);
    for (int r = rr.lo; r <= rr.hi; ++r) tab.ranks.push_back(r);
    for (int k = t.gamma + 2 * t.delta; k >= t.gamma + t.delta; --k)
        tab.kernel_dims.push_back(k);
    for (int k : tab.kernel_dims) {
        IntRange pr = pair_rank_range(p, t, k);
        std::vector<std::uint8_t> row;
        for (int r : tab.ranks) row.push_back(pr.contains(r) ? 1 : 0);
        tab.achievable.push_back(std::move(row));
    }
    return tab;
}

}  // namespace zpzp2
