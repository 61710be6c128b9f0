#include "zpzp2/analysis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "zpzp2/kernels.hpp"

namespace zpzp2 {

namespace {

// Gray-domain row echelon over Z_p. Stored rows are normalized to pivot 1
// and hold zeros at all earlier pivot columns, so one subtraction pass per
// stored row reduces a candidate completely.
class GrayElim {
  public:
    GrayElim(int n, int p) : n_(n), p_(p) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<GrayWord>& rows() const { return rows_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }

    bool add(std::span<const std::uint8_t> row) {
        GrayWord r(row.begin(), row.end());
        const auto& k = kernels::active();
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint8_t c = r[pivot_cols_[i]];
            if (c)
                k.addmul_mod_u8(r.data(), rows_[i].data(),
                                static_cast<std::uint8_t>(p_ - c), n_,
                                static_cast<std::uint8_t>(p_));
        }
        int col = -1;
        for (int j = 0; j < n_; ++j)
            if (r[j]) {
                col = j;
                break;
            }
        if (col < 0) return false;
        int inv = inv_mod_p(Prime(p_), r[col]);
        for (int j = 0; j < n_; ++j) r[j] = static_cast<std::uint8_t>(r[j] * inv % p_);
        rows_.push_back(std::move(r));
        pivot_cols_.push_back(col);
        return true;
    }

  private:
    int n_, p_;
    std::vector<GrayWord> rows_;
    std::vector<int> pivot_cols_;
};

// big_phi without the allocation, writing into out[0 .. alpha + p*beta).
void gray_into(const MixedWord& w, std::uint8_t* out) {
    int p = w.prime().value();
    for (int i = 0; i < w.alpha(); ++i) out[i] = w.x(i);
    std::uint8_t* b = out + w.alpha();
    for (int j = 0; j < w.beta(); ++j, b += p) {
        int lo = w.y(j) % p, v = w.y(j) / p;
        for (int i = 0; i < p; ++i) {
            b[i] = static_cast<std::uint8_t>(v);
            v += lo;
            if (v >= p) v -= p;
        }
    }
}

void lo_digits_into(const MixedWord& w, std::uint8_t* out) {
    int p = w.prime().value();
    for (int j = 0; j < w.beta(); ++j) out[j] = static_cast<std::uint8_t>(w.y(j) % p);
}

std::size_t round_up(std::size_t v, std::size_t to) { return (v + to - 1) / to * to; }

// Reduced generator presentation: gamma order-p rows and delta order-p^2
// rows (the input matrix may present the same group differently).
struct ReducedBasis {
    std::vector<MixedWord> u_rows;
    std::vector<MixedWord> v_rows;
};

ReducedBasis reduced_basis(const AdditiveCode& c) {
    RowReducer red(c.prime(), c.shape());
    red.reduce(c.generators().all_rows());
    ReducedBasis rb;
    std::vector<MixedWord> rows = red.basis_rows();
    for (MixedWord& w : rows) {
        if (word_order(w) == c.prime().squared())
            rb.v_rows.push_back(std::move(w));
        else
            rb.u_rows.push_back(std::move(w));
    }
    return rb;
}

std::uint64_t checked_count(const AdditiveCode& c, std::uint64_t cap) {
    unsigned __int128 size = c.size();
    if (size > cap)
        throw CapExceeded("code has " + c.size_string() +
                          " codewords, above the enumeration cap " + std::to_string(cap));
    return static_cast<std::uint64_t>(size);
}

// Membership table for the order-p carry patterns: bit m answers whether
// the word with Y entries p*(p-1) at the set bits of m lies in C. Combined
// with a carry mask this decides big_phi(u) + big_phi(v) in big_phi(C)
// in a couple of cycles. Only built for beta <= kCarryTableMaxBeta.
constexpr int kCarryTableMaxBeta = 26;

class CarryTable {
  public:
    CarryTable(const AdditiveCode& c, std::uint64_t cap) : c_(c), cap_(cap) {
        int beta = c.shape().beta;
        const MembershipIndex& idx = c.index(cap);
        if (beta <= kCarryTableMaxBeta) {
            std::uint64_t patterns = std::uint64_t{1} << beta;
            bits_.assign((patterns + 63) / 64, 0);
            int corr = c.prime().value() * (c.prime().value() - 1);
            MixedWord w(c.prime(), c.shape());
            for (std::uint64_t m = 0; m < patterns; ++m) {
                for (int j = 0; j < beta; ++j)
                    w.set_y(j, (m >> j) & 1 ? corr : 0);
                if (idx.contains_word(w)) bits_[m >> 6] |= std::uint64_t{1} << (m & 63);
            }
            tabled_ = true;
        }
    }

    bool tabled() const { return tabled_; }

    bool pattern_in_code(std::uint64_t mask) const {
        return (bits_[mask >> 6] >> (mask & 63)) & 1;
    }

    // Fallback for shapes too wide to table: probe the pattern word built
    // from the two low-digit vectors directly.
    bool pair_in_code(const std::uint8_t* lo_a, const std::uint8_t* lo_b) const {
        int p = c_.prime().value(), corr = p * (p - 1);
        MixedWord w(c_.prime(), c_.shape());
        for (int j = 0; j < c_.shape().beta; ++j)
            if (lo_a[j] + lo_b[j] >= p) w.set_y(j, corr);
        return c_.index(cap_).contains_word(w);
    }

  private:
    const AdditiveCode& c_;
    std::uint64_t cap_;
    bool tabled_ = false;
    std::vector<std::uint64_t> bits_;
};

// Low-digit rows of every codeword, padded so the vector kernels never
// need a scalar tail.
struct LoMatrix {
    std::uint64_t count = 0;
    std::size_t stride = 0;
    std::vector<std::uint8_t> data;

    LoMatrix(const AdditiveCode& c, std::uint64_t cap) {
        count = checked_count(c, cap);
        stride = round_up(std::max(1, c.shape().beta), 32);
        data.assign(count * stride, 0);
        std::uint64_t i = 0;
        detail::walk_codewords(c.generators(), [&](const MixedWord& w) {
            lo_digits_into(w, data.data() + i * stride);
            ++i;
        });
    }

    const std::uint8_t* row(std::uint64_t i) const { return data.data() + i * stride; }
};

KernelReport coset_kernel(const AdditiveCode& c, std::uint64_t cap) {
    const CodeType& t = c.type();
    Prime p = c.prime();
    int pv = p.value(), delta = t.delta, beta = c.shape().beta;

    ReducedBasis rb = reduced_basis(c);
    LoMatrix lo(c, cap);
    CarryTable tbl(c, cap);
    bool fast = tbl.tabled() && beta <= 64;
    const auto& kr = kernels::active();

    std::vector<std::vector<std::uint8_t>> accepted;
    std::vector<std::uint8_t> rep_lo(lo.stride, 0);

    // Odometer over the coefficient tuples a in Z_p^delta; the
    // representative sum(a_j v_j) is maintained by prefix sums. Every
    // codeword pairs against the representative; the whole coset
    // a + order-p subcode stands or falls with it since carries only see
    // low digits.
    std::vector<int> d(delta, 0);
    MixedWord zero(p, c.shape());
    std::vector<MixedWord> prefix(delta + 1, zero);
    while (true) {
        const MixedWord& rep = prefix[delta];
        bool reject = false;
        lo_digits_into(rep, rep_lo.data());
        bool rep_carry_free = true;
        for (int j = 0; j < beta; ++j)
            if (rep_lo[j]) rep_carry_free = false;
        if (!rep_carry_free) {
            if (fast) {
                for (std::uint64_t i = 0; i < lo.count; ++i) {
                    std::uint64_t mask = kr.carry_mask_u8(rep_lo.data(), lo.row(i),
                                                          lo.stride,
                                                          static_cast<std::uint8_t>(pv));
                    if (!tbl.pattern_in_code(mask)) {
                        reject = true;
                        break;
                    }
                }
            } else {
                for (std::uint64_t i = 0; i < lo.count; ++i)
                    if (!tbl.pair_in_code(rep_lo.data(), lo.row(i))) {
                        reject = true;
                        break;
                    }
            }
        }
        if (!reject)
            accepted.emplace_back(d.begin(), d.end());

        int j = delta - 1;
        while (j >= 0 && d[j] == pv - 1) {
            d[j] = 0;
            --j;
        }
        if (j < 0) break;
        ++d[j];
        prefix[j + 1] = add(prefix[j + 1], rb.v_rows[j]);
        for (int i = j + 1; i < delta; ++i) prefix[i + 1] = prefix[i];
    }

    // The accepted tuples must form a Z_p-subspace; its dimension gives
    // the kernel size |K| = p^(gamma + delta + r).
    GrayElim span(delta, pv);
    for (const auto& a : accepted) span.add(a);
    unsigned __int128 expect = pow_u128(pv, span.rank());
    if (expect != static_cast<unsigned __int128>(accepted.size()))
        throw std::logic_error("kernel representatives do not form a subgroup");

    KernelReport rep;
    rep.method = KernelMethod::kCoset;
    rep.kernel_dim = t.gamma + delta + span.rank();
    rep.kernel_deficit = t.size_exponent() - rep.kernel_dim;
    rep.coset_exponents = std::move(accepted);
    return rep;
}

// Gray rows of every codeword plus their packed keys, for the
// definitional sweeps.
struct GrayMatrix {
    std::uint64_t count = 0;
    std::size_t stride = 0;
    int n = 0;
    std::vector<std::uint8_t> data;
    std::vector<std::uint64_t> keys;
    bool keyed = false;

    GrayMatrix(const AdditiveCode& c, std::uint64_t cap) {
        count = checked_count(c, cap);
        n = c.shape().alpha + c.prime().value() * c.shape().beta;
        stride = round_up(n, 32);
        data.assign(count * stride, 0);
        const PackSpec& ps = c.index(cap).pack();
        keyed = ps.fits_u64();
        if (keyed) keys.reserve(count);
        std::uint64_t i = 0;
        detail::walk_codewords(c.generators(), [&](const MixedWord& w) {
            gray_into(w, data.data() + i * stride);
            if (keyed) keys.push_back(ps.pack(w));
            ++i;
        });
    }

    const std::uint8_t* row(std::uint64_t i) const { return data.data() + i * stride; }
};

KernelReport brute_kernel(const AdditiveCode& c, std::uint64_t cap) {
    const CodeType& t = c.type();
    Prime p = c.prime();
    int pv = p.value();
    const MembershipIndex& idx = c.index(cap);
    GrayMatrix gm(c, cap);
    const auto& kr = kernels::active();

    // Candidates are swept in a fixed pseudo-random order: the failing
    // partners of a non-kernel word come in whole kernel cosets, so a
    // shuffled scan exits geometrically fast no matter how the
    // enumeration order clusters them.
    std::vector<std::uint32_t> order(gm.count);
    for (std::uint64_t i = 0; i < gm.count; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::mt19937 rng(0x5eed);
    std::shuffle(order.begin(), order.end(), rng);

    // Confirmed kernel members form a subgroup of (Z_p^n, +): if u and v
    // fix big_phi(C) under translation then so does u + v. Growing a key
    // set of the subgroup generated so far lets every later member of it
    // skip its sweep entirely.
    KeySet known;
    std::vector<std::uint8_t> members;  // gray rows of the known subgroup
    std::uint64_t member_count = 0;
    auto member_row = [&](std::uint64_t i) { return members.data() + i * gm.stride; };
    auto push_member = [&](const std::uint8_t* g) {
        members.insert(members.end(), g, g + gm.stride);
        MixedWord w = big_phi_inverse(p, std::span(g, static_cast<std::size_t>(gm.n)),
                                       c.shape());
        known.insert(idx.pack().pack(w));
        ++member_count;
    };
    std::vector<std::uint8_t> zero_row(gm.stride, 0);
    push_member(zero_row.data());

    std::vector<std::uint8_t> buf(gm.stride, 0);
    std::vector<std::uint8_t> scaled(gm.stride, 0);
    for (std::uint64_t ci = 0; ci < gm.count; ++ci) {
        if (gm.keyed && known.contains(gm.keys[ci])) continue;
        const std::uint8_t* gu = gm.row(ci);
        bool pass = true;
        for (std::uint64_t jj = 0; jj < gm.count; ++jj) {
            const std::uint8_t* gv = gm.row(order[jj]);
            kr.add_mod_u8(gu, gv, buf.data(), gm.stride, static_cast<std::uint8_t>(pv));
            if (!idx.contains_gray(std::span(buf.data(), static_cast<std::size_t>(gm.n)))) {
                pass = false;
                break;
            }
        }
        if (!pass) continue;
        // Close the subgroup: new span = old + t*gu for t = 1..p-1.
        std::uint64_t old_count = member_count;
        std::copy(gu, gu + gm.stride, scaled.begin());
        for (int tmul = 1; tmul < pv; ++tmul) {
            if (tmul > 1)
                kr.add_mod_u8(scaled.data(), gu, scaled.data(), gm.stride,
                              static_cast<std::uint8_t>(pv));
            for (std::uint64_t mi = 0; mi < old_count; ++mi) {
                kr.add_mod_u8(member_row(mi), scaled.data(), buf.data(), gm.stride,
                              static_cast<std::uint8_t>(pv));
                push_member(buf.data());
            }
        }
    }

    int dim = 0;
    while (pow_u128(pv, dim) < member_count) ++dim;
    if (pow_u128(pv, dim) != member_count)
        throw std::logic_error("kernel size is not a power of p");

    KernelReport rep;
    rep.method = KernelMethod::kBruteForce;
    rep.kernel_dim = dim;
    rep.kernel_deficit = t.size_exponent() - dim;
    return rep;
}

}  // namespace

const char* rank_method_name(RankMethod m) {
    switch (m) {
        case RankMethod::kSpanElimination: return "span-elimination";
        case RankMethod::kBruteForce: return "brute-force";
        default: return "auto";
    }
}

const char* kernel_method_name(KernelMethod m) {
    switch (m) {
        case KernelMethod::kCoset: return "coset";
        case KernelMethod::kBruteForce: return "brute-force";
        default: return "auto";
    }
}

std::vector<MixedWord> cubic_span_generators(const AdditiveCode& c) {
    if (c.prime().value() != 3)
        throw std::invalid_argument("the span generator family requires p = 3");
    ReducedBasis rb = reduced_basis(c);
    std::vector<MixedWord> fam;
    for (const MixedWord& u : rb.u_rows) fam.push_back(u);
    for (const MixedWord& v : rb.v_rows) fam.push_back(v);
    int delta = static_cast<int>(rb.v_rows.size());
    for (int k = 0; k < delta; ++k)
        for (int l = 0; l <= k; ++l)
            fam.push_back(scale(3, star(rb.v_rows[k], rb.v_rows[l])));
    for (int x = 0; x < delta; ++x)
        for (int y = x; y < delta; ++y)
            for (int z = y; z < delta; ++z)
                fam.push_back(scale(3, star(star(rb.v_rows[x], rb.v_rows[y]), rb.v_rows[z])));
    return fam;
}

RankReport compute_rank(const AdditiveCode& c, RankMethod method, std::uint64_t cap) {
    if (method == RankMethod::kAuto)
        method = c.prime().value() == 3 ? RankMethod::kSpanElimination
                                        : RankMethod::kBruteForce;
    const CodeType& t = c.type();
    int n = c.shape().alpha + c.prime().value() * c.shape().beta;
    RankReport rep;
    rep.method = method;
    GrayElim elim(n, c.prime().value());

    if (method == RankMethod::kSpanElimination) {
        for (const MixedWord& w : cubic_span_generators(c)) {
            GrayWord g = big_phi(w);
            if (elim.add(g)) rep.span_generators.push_back(w);
        }
    } else {
        checked_count(c, cap);
        std::vector<std::uint8_t> buf(n);
        detail::walk_codewords(c.generators(), [&](const MixedWord& w) {
            gray_into(w, buf.data());
            if (elim.add(std::span(buf.data(), buf.size()))) rep.span_generators.push_back(w);
        });
    }
    rep.rank = elim.rank();
    rep.rank_excess = rep.rank - t.size_exponent();
    return rep;
}

AdditiveCode span_code(const AdditiveCode& c) {
    std::vector<MixedWord> rows =
        reduce_rows(c.prime(), c.shape(), cubic_span_generators(c));
    return AdditiveCode(GeneratorMatrix(c.prime(), c.shape(), rows));
}

KernelReport compute_kernel(const AdditiveCode& c, KernelMethod method, std::uint64_t cap) {
    if (method == KernelMethod::kAuto) method = KernelMethod::kCoset;
    if (method == KernelMethod::kCoset) return coset_kernel(c, cap);
    return brute_kernel(c, cap);
}

AdditiveCode kernel_code(const AdditiveCode& c, KernelMethod method, std::uint64_t cap) {
    if (method == KernelMethod::kAuto) method = KernelMethod::kCoset;
    Prime p = c.prime();

    std::vector<MixedWord> gens;
    if (method == KernelMethod::kCoset) {
        KernelReport rep = coset_kernel(c, cap);
        ReducedBasis rb = reduced_basis(c);
        gens = rb.u_rows;
        GrayElim span(c.type().delta, p.value());
        for (const auto& a : rep.coset_exponents) span.add(a);
        for (const GrayWord& b : span.rows()) {
            MixedWord w(p, c.shape());
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j]) w = add(w, scale(b[j], rb.v_rows[j]));
            gens.push_back(w);
        }
        for (const MixedWord& v : rb.v_rows) gens.push_back(scale(p.value(), v));
    } else {
        // Definitional: collect the kernel words themselves and reduce.
        const MembershipIndex& idx = c.index(cap);
        GrayMatrix gm(c, cap);
        const auto& kr = kernels::active();
        std::vector<std::uint8_t> buf(gm.stride, 0);
        for (std::uint64_t ci = 0; ci < gm.count; ++ci) {
            const std::uint8_t* gu = gm.row(ci);
            bool pass = true;
            for (std::uint64_t jj = 0; jj < gm.count; ++jj) {
                kr.add_mod_u8(gu, gm.row(jj), buf.data(), gm.stride,
                              static_cast<std::uint8_t>(p.value()));
                if (!idx.contains_gray(
                        std::span(buf.data(), static_cast<std::size_t>(gm.n)))) {
                    pass = false;
                    break;
                }
            }
            if (pass)
                gens.push_back(big_phi_inverse(
                    p, std::span(gu, static_cast<std::size_t>(gm.n)), c.shape()));
        }
    }
    std::vector<MixedWord> rows = reduce_rows(p, c.shape(), gens);
    return AdditiveCode(GeneratorMatrix(p, c.shape(), rows));
}

bool is_gray_linear(const AdditiveCode& c, std::uint64_t cap) {
    std::uint64_t count = checked_count(c, cap);
    int beta = c.shape().beta;
    if (count <= 4096 && beta <= 64) {
        // Carry criterion pair by pair: big_phi(C) is linear exactly when
        // every carry correction word stays inside C.
        LoMatrix lo(c, cap);
        CarryTable tbl(c, cap);
        const auto& kr = kernels::active();
        for (std::uint64_t i = 0; i < lo.count; ++i)
            for (std::uint64_t j = i; j < lo.count; ++j) {
                if (tbl.tabled()) {
                    std::uint64_t mask =
                        kr.carry_mask_u8(lo.row(i), lo.row(j), lo.stride,
                                         static_cast<std::uint8_t>(c.prime().value()));
                    if (!tbl.pattern_in_code(mask)) return false;
                } else if (!tbl.pair_in_code(lo.row(i), lo.row(j))) {
                    return false;
                }
            }
        return true;
    }
    return compute_kernel(c, KernelMethod::kCoset, cap).kernel_deficit == 0;
}

bool check_coset_decomposition(const AdditiveCode& c, const KernelReport& report,
                               std::uint64_t cap) {
    if (report.method != KernelMethod::kCoset) return false;
    Prime p = c.prime();
    int pv = p.value(), delta = c.type().delta;
    std::uint64_t count = checked_count(c, cap);
    const MembershipIndex& idx = c.index(cap);
    ReducedBasis rb = reduced_basis(c);

    // Transversal exponents: extend the accepted subspace to all of
    // Z_p^delta by unit tuples; combinations of the extension enumerate
    // one representative per kernel coset.
    GrayElim span(delta, pv);
    for (const auto& a : report.coset_exponents) span.add(a);
    std::vector<int> ext;
    for (int j = 0; j < delta && span.rank() < delta; ++j) {
        GrayWord e(delta, 0);
        e[j] = 1;
        if (span.add(e)) ext.push_back(j);
    }
    int kbar = static_cast<int>(ext.size());
    if (kbar != report.kernel_deficit) return false;

    AdditiveCode kc = kernel_code(c, KernelMethod::kCoset, cap);
    unsigned __int128 ksize = kc.size();
    if (ksize * pow_u128(pv, kbar) != static_cast<unsigned __int128>(count)) return false;

    // Walk every kernel word once per transversal representative; the
    // shifted Gray rows must all live in big_phi(C) and never repeat.
    KeySet seen(count);
    int n = c.shape().alpha + pv * c.shape().beta;
    std::vector<std::uint8_t> gb(n), buf(n);
    const auto& kr = kernels::active();
    bool ok = true;
    std::vector<int> t(kbar, 0);
    while (ok) {
        MixedWord rep(p, c.shape());
        for (int i = 0; i < kbar; ++i)
            if (t[i]) rep = add(rep, scale(t[i], rb.v_rows[ext[i]]));
        gray_into(rep, gb.data());
        detail::walk_codewords(kc.generators(), [&](const MixedWord& kw) {
            if (!ok) return;
            gray_into(kw, buf.data());
            kr.add_mod_u8(gb.data(), buf.data(), buf.data(), n,
                          static_cast<std::uint8_t>(pv));
            if (!idx.contains_gray(std::span(buf.data(), buf.size()))) {
                ok = false;
                return;
            }
            MixedWord w = big_phi_inverse(p, std::span(buf.data(), buf.size()), c.shape());
            std::uint64_t key = idx.pack().fits_u64() ? idx.pack().pack(w) : 0;
            if (idx.pack().fits_u64()) {
                if (seen.contains(key)) {
                    ok = false;
                    return;
                }
                seen.insert(key);
            }
        });
        int i = kbar - 1;
        while (i >= 0 && t[i] == pv - 1) {
            t[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++t[i];
    }
    if (!ok) return false;
    if (idx.pack().fits_u64() && seen.size() != count) return false;
    return true;
}

long long min_hamming_distance(const AdditiveCode& c, std::uint64_t cap) {
    std::uint64_t count = checked_count(c, cap);
    if (count < 2)
        throw std::invalid_argument("minimum distance needs at least two codewords");
    int n = c.shape().alpha + c.prime().value() * c.shape().beta;
    std::vector<std::uint8_t> buf(n);
    const auto& kr = kernels::active();
    long long best = n + 1;
    detail::walk_codewords(c.generators(), [&](const MixedWord& w) {
        if (w.is_zero()) return;
        gray_into(w, buf.data());
        long long wt = static_cast<long long>(kr.count_nonzero_u8(buf.data(), n));
        if (wt < best) best = wt;
    });
    return best;
}

}  // namespace zpzp2
