// Acceptance gate: one line per criterion, PASS/FAIL, with timing.
// Returns 0 only when every criterion passes.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zpzp2/analysis.hpp"
#include "zpzp2/cli.hpp"
#include "zpzp2/code.hpp"
#include "zpzp2/construct.hpp"
#include "zpzp2/gray.hpp"
#include "zpzp2/io.hpp"

using namespace zpzp2;

namespace {

MixedWord random_word(std::mt19937& rng, Prime p, Shape shape) {
    MixedWord w(p, shape);
    for (int i = 0; i < shape.alpha; ++i) w.set_x(i, (int)(rng() % p.value()));
    for (int j = 0; j < shape.beta; ++j) w.set_y(j, (int)(rng() % (p.value() * p.value())));
    return w;
}

GrayWord add_gray(Prime p, const GrayWord& a, const GrayWord& b) {
    GrayWord out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = (std::uint8_t)((a[i] + b[i]) % p.value());
    return out;
}

std::vector<MixedWord> collect(const GeneratorMatrix& g) {
    std::vector<MixedWord> all;
    detail::walk_codewords(g, [&](const MixedWord& w) { all.push_back(w); });
    return all;
}

// A random generator matrix in the Theorem-1 block shape for an exact type:
// identity blocks pinned, every free block drawn uniformly.
GeneratorMatrix random_typed_matrix(std::mt19937& rng, Prime p, const CodeType& t) {
    int pv = p.value();
    int s = t.beta - (t.gamma - t.kappa) - t.delta;
    Shape shape{t.alpha, t.beta};
    std::vector<MixedWord> rows;
    for (int i = 0; i < t.kappa; ++i) {
        MixedWord w(p, shape);
        w.set_x(i, 1);
        for (int j = t.kappa; j < t.alpha; ++j) w.set_x(j, (int)(rng() % pv));
        for (int j = 0; j < s; ++j) w.set_y(j, pv * (int)(rng() % pv));
        rows.push_back(w);
    }
    for (int i = 0; i < t.gamma - t.kappa; ++i) {
        MixedWord w(p, shape);
        for (int j = 0; j < s; ++j) w.set_y(j, pv * (int)(rng() % pv));
        w.set_y(s + i, pv);
        rows.push_back(w);
    }
    for (int i = 0; i < t.delta; ++i) {
        MixedWord w(p, shape);
        for (int j = t.kappa; j < t.alpha; ++j) w.set_x(j, (int)(rng() % pv));
        for (int j = 0; j < s; ++j) w.set_y(j, (int)(rng() % (pv * pv)));
        for (int j = 0; j < t.gamma - t.kappa; ++j) w.set_y(s + j, (int)(rng() % pv));
        w.set_y(s + (t.gamma - t.kappa) + i, 1);
        rows.push_back(w);
    }
    return GeneratorMatrix(p, shape, rows);
}

bool criterion_gray_identities(std::string& detail) {
    std::mt19937 rng(0xACC1);
    for (int pv : {3, 5, 7}) {
        Prime p(pv);
        for (int trial = 0; trial < 1000; ++trial) {
            Shape shape{(int)(rng() % 5), (int)(rng() % 5)};
            if (shape.alpha + shape.beta == 0) shape.beta = 1;
            MixedWord u = random_word(rng, p, shape);
            MixedWord v = random_word(rng, p, shape);
            MixedWord carry = carry_word(u, v);
            MixedWord corr = carry_correction(u, v);
            // P = (p-1)P': the correction is the (p-1)-fold of p * carry
            if (!(corr == scale(pv - 1, scale(pv, carry)))) {
                detail = "correction != (p-1) * p * carry";
                return false;
            }
            GrayWord sum = add_gray(p, big_phi(u), big_phi(v));
            if (sum != big_phi(add(add(u, v), corr))) {
                detail = "phi(u)+phi(v) != phi(u+v+correction)";
                return false;
            }
            if (big_phi(add(u, v)) != add_gray(p, sum, big_phi(scale(pv, carry)))) {
                detail = "phi(u+v) != phi(u)+phi(v)+phi(p*carry)";
                return false;
            }
        }
    }
    detail = "3000 pairs across p in {3,5,7}";
    return true;
}

bool criterion_isometry(std::string& detail) {
    long long pairs = 0;
    for (int pv : {3, 5}) {
        Prime p(pv);
        for (int a = 0; a < pv * pv; ++a) {
            GrayWord ga = phi(p, a);
            for (int b = 0; b < pv * pv; ++b) {
                std::vector<std::uint16_t> va{(std::uint16_t)a}, vb{(std::uint16_t)b};
                if (hom_distance(p, va, vb) != hamming_distance(ga, phi(p, b))) {
                    detail = "distance mismatch at p=" + std::to_string(pv);
                    return false;
                }
                ++pairs;
            }
        }
    }
    detail = std::to_string(pairs) + " symbol pairs, p in {3,5}";
    return true;
}

bool criterion_example1(std::string& detail) {
    Prime p(3);
    CodeType t{2, 10, 2, 4, 1};
    for (int r = 10; r <= 15; ++r) {
        AdditiveCode c(build_rank_witness(p, t, r));
        int span = compute_rank(c, RankMethod::kSpanElimination).rank;
        int brute = compute_rank(c, RankMethod::kBruteForce).rank;
        if (span != r || brute != r) {
            detail = "r=" + std::to_string(r) + " analyzed to span " +
                     std::to_string(span) + ", brute " + std::to_string(brute);
            return false;
        }
    }
    detail = "ranks 10..15 of (2,10;2,4;1), span and brute force over 3^10";
    return true;
}

bool criterion_example2(std::string& detail) {
    Prime p3(3);
    CodeType big{2, 9, 2, 5, 1};
    for (int k = 7; k <= 12; ++k) {
        AdditiveCode c(build_kernel_witness(p3, big, k));
        int got = compute_kernel(c, KernelMethod::kCoset).kernel_dim;
        if (got != k) {
            detail = "coset kernel of S_" + std::to_string(k) + " = " + std::to_string(got);
            return false;
        }
    }
    CodeType small{2, 6, 1, 3, 1};
    for (int pv : {3, 5}) {
        Prime p(pv);
        for (int kbar = 0; kbar <= 3; ++kbar) {
            int k = 7 - kbar;
            AdditiveCode c(build_kernel_witness(p, small, k));
            int coset = compute_kernel(c, KernelMethod::kCoset).kernel_dim;
            int brute = compute_kernel(c, KernelMethod::kBruteForce).kernel_dim;
            if (coset != k || brute != k) {
                detail = "p=" + std::to_string(pv) + " kbar=" + std::to_string(kbar) +
                         " gave coset " + std::to_string(coset) + ", brute " +
                         std::to_string(brute);
                return false;
            }
        }
    }
    detail = "(2,9;2,5;1) coset k=7..12; (2,6;1,3;1) coset == brute, p in {3,5}";
    return true;
}

bool criterion_table1(std::string& detail) {
    const std::string golden =
        "k\\r,14,15,16,17,18,19,20,21\n"
        "14,1,0,0,0,0,0,0,0\n"
        "13,0,1,0,0,0,0,0,0\n"
        "12,0,1,1,1,1,1,0,0\n"
        "11,0,1,1,1,1,1,1,1\n"
        "10,0,1,1,1,1,1,1,1\n"
        "9,0,1,1,1,1,1,1,1\n"
        "8,0,1,1,1,1,1,1,1\n";
    std::ostringstream out, err;
    int code = run_cli({"table", "--p", "3", "--alpha", "2", "--beta", "14", "--gamma",
                        "2", "--delta", "6", "--kappa", "1", "--verify"},
                       out, err);
    if (code != 0) {
        detail = "exit " + std::to_string(code) + ": " + err.str();
        return false;
    }
    if (out.str() != golden) {
        detail = "CSV differs from the golden grid";
        return false;
    }
    detail = "35 verified cells, golden CSV match";
    return true;
}

bool criterion_oracle_equivalence(std::string& detail) {
    std::mt19937 rng(0xACC6);
    Prime p(3);
    int done = 0;
    while (done < 50) {
        CodeType t;
        t.delta = (int)(rng() % 4);
        t.gamma = (int)(rng() % (8 - 2 * t.delta + 1));
        if (t.gamma + t.delta == 0) continue;
        t.kappa = (int)(rng() % (t.gamma + 1));
        t.alpha = t.kappa + (int)(rng() % 3);
        t.beta = (t.gamma - t.kappa) + t.delta + (int)(rng() % 3);
        if (!t.satisfies_parameter_conditions()) continue;

        GeneratorMatrix g = random_typed_matrix(rng, p, t);
        AdditiveCode c(g);
        if (c.type() != t) {
            detail = "typed matrix got " + format_type(c.type()) + " wanted " +
                     format_type(t);
            return false;
        }
        int span = compute_rank(c, RankMethod::kSpanElimination).rank;
        int brute_r = compute_rank(c, RankMethod::kBruteForce).rank;
        int coset = compute_kernel(c, KernelMethod::kCoset).kernel_dim;
        int brute_k = compute_kernel(c, KernelMethod::kBruteForce).kernel_dim;
        if (span != brute_r || coset != brute_k) {
            detail = format_type(t) + " rank " + std::to_string(span) + "/" +
                     std::to_string(brute_r) + " kernel " + std::to_string(coset) + "/" +
                     std::to_string(brute_k);
            return false;
        }
        ++done;
    }
    detail = "50 random types, rank and kernel agree across methods";
    return true;
}

bool criterion_duality(std::string& detail) {
    std::mt19937 rng(0xACC7);
    int done = 0;
    while (done < 30) {
        int pv = done % 2 ? 5 : 3;
        Prime p(pv);
        Shape shape{(int)(rng() % 5), 1 + (int)(rng() % 4)};
        if (shape.alpha + 2 * shape.beta > 10) continue;
        RowReducer red(p, shape);
        int tries = (int)(rng() % 4);
        for (int i = 0; i < tries; ++i) red.insert(random_word(rng, p, shape));
        AdditiveCode c(GeneratorMatrix(p, shape, red.basis_rows()));
        AdditiveCode d = dual(c);

        if (c.size() * d.size() != pow_u128(pv, shape.alpha + 2 * shape.beta)) {
            detail = "size product violated at " + format_type(c.type());
            return false;
        }
        if (d.type() != c.type().dual_type()) {
            detail = "dual type " + format_type(d.type()) + " != " +
                     format_type(c.type().dual_type());
            return false;
        }
        // materialize the smaller group, stream the larger one over it
        const AdditiveCode& small = c.size() <= d.size() ? c : d;
        const AdditiveCode& large = c.size() <= d.size() ? d : c;
        std::vector<MixedWord> sw = collect(small.generators());
        bool paired = true;
        zpzp2::detail::walk_codewords(large.generators(), [&](const MixedWord& b) {
            for (const MixedWord& a : sw)
                if (inner_product(a, b) != 0) paired = false;
        });
        if (!paired) {
            detail = "nonzero inner product at " + format_type(c.type());
            return false;
        }
        ++done;
    }
    detail = "30 codes, all cross products zero, sizes and types match";
    return true;
}

bool criterion_linearity_coupling(std::string& detail) {
    Prime p3(3);
    int witnesses = 0;
    auto couple = [&](const AdditiveCode& c, int pv) {
        int rank = pv == 3 ? compute_rank(c, RankMethod::kSpanElimination).rank
                           : compute_rank(c, RankMethod::kBruteForce).rank;
        KernelReport kr = compute_kernel(c, KernelMethod::kCoset);
        bool linear = is_gray_linear(c);
        int rbar = rank - c.type().size_exponent();
        ++witnesses;
        return (linear == (kr.kernel_deficit == 0)) && (linear == (rbar == 0));
    };

    CodeType t1{2, 10, 2, 4, 1};
    for (int r = 10; r <= 15; ++r)
        if (!couple(AdditiveCode(build_rank_witness(p3, t1, r)), 3)) {
            detail = "rank witness r=" + std::to_string(r);
            return false;
        }
    CodeType t2{2, 9, 2, 5, 1};
    for (int k = 7; k <= 12; ++k)
        if (!couple(AdditiveCode(build_kernel_witness(p3, t2, k)), 3)) {
            detail = "kernel witness k=" + std::to_string(k);
            return false;
        }
    CodeType t3{2, 6, 1, 3, 1};
    for (int pv : {3, 5}) {
        Prime p(pv);
        for (int k = 4; k <= 7; ++k)
            if (!couple(AdditiveCode(build_kernel_witness(p, t3, k)), pv)) {
                detail = "kernel witness p=" + std::to_string(pv) +
                         " k=" + std::to_string(k);
                return false;
            }
    }
    for (int k = 4; k <= 7; ++k) {
        IntRange pr = pair_rank_range(p3, t3, k);
        for (int r = pr.lo; r <= pr.hi; ++r)
            if (!couple(AdditiveCode(build_pair_witness(p3, t3, r, k)), 3)) {
                detail = "pair witness (r,k)=(" + std::to_string(r) + "," +
                         std::to_string(k) + ")";
                return false;
            }
    }
    detail = std::to_string(witnesses) + " witnesses, linear <=> rbar=0 <=> kbar=0";
    return true;
}

bool criterion_standardization(std::string& detail) {
    std::mt19937 rng(0xACC9);
    std::vector<std::pair<int, GeneratorMatrix>> bases;
    bases.emplace_back(3, build_pair_witness(Prime(3), CodeType{2, 6, 1, 3, 1}, 9, 5));
    bases.emplace_back(3, build_kernel_witness(Prime(3), CodeType{1, 4, 1, 2, 1}, 4));
    bases.emplace_back(5, build_kernel_witness(Prime(5), CodeType{1, 4, 1, 2, 1}, 4));
    bases.emplace_back(3, build_kernel_witness(Prime(3), CodeType{0, 5, 1, 2, 0}, 4));

    for (int trial = 0; trial < 30; ++trial) {
        const auto& [pv, base] = bases[trial % bases.size()];
        Prime p(pv);
        Shape shape = base.shape();
        CodeType t = compute_type(base);
        std::vector<MixedWord> rows = base.all_rows();

        // random row operations: transvections and unit scalings
        for (int op = 0; op < 8; ++op) {
            std::size_t i = rng() % rows.size();
            std::size_t j = rng() % rows.size();
            if (i != j) rows[i] = add(rows[i], scale((int)(rng() % (pv * pv)), rows[j]));
            int u = (int)(rng() % (pv * pv));
            if (u % pv != 0) rows[i] = scale(u, rows[i]);
        }
        std::vector<MixedWord> shuffled;
        while (!rows.empty()) {
            std::size_t i = rng() % rows.size();
            shuffled.push_back(rows[i]);
            rows.erase(rows.begin() + (long)i);
        }
        // random column permutations within X and within Y
        std::vector<int> perm(shape.alpha + shape.beta);
        for (int i = 0; i < shape.alpha + shape.beta; ++i) perm[i] = i;
        for (int i = shape.alpha - 1; i > 0; --i)
            std::swap(perm[i], perm[rng() % (i + 1)]);
        for (int i = shape.beta - 1; i > 0; --i)
            std::swap(perm[shape.alpha + i], perm[shape.alpha + rng() % (i + 1)]);
        for (MixedWord& w : shuffled) w = apply_column_permutation(perm, w);

        GeneratorMatrix scrambled(p, shape, shuffled);
        if (compute_type(scrambled) != t) {
            detail = "scramble changed the type to " + format_type(compute_type(scrambled));
            return false;
        }
        StandardForm sf = standardize(scrambled);
        if (sf.type != t) {
            detail = "standard form type " + format_type(sf.type);
            return false;
        }
        AdditiveCode standardized(sf.to_matrix(p, shape));
        AdditiveCode scrambled_code(scrambled);
        if (standardized.size() != scrambled_code.size()) {
            detail = "codeword count changed";
            return false;
        }
        // equal sizes plus one inclusion give set equality (the permutation
        // is a bijection, so distinct codewords stay distinct)
        bool included = true;
        zpzp2::detail::walk_codewords(scrambled, [&](const MixedWord& w) {
            if (!standardized.contains(apply_column_permutation(sf.column_permutation, w)))
                included = false;
        });
        if (!included) {
            detail = "permuted codeword missing from the standardized code";
            return false;
        }
    }
    detail = "30 scrambles, type and permuted codeword set recovered";
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Gray additivity and carry consistency", 1.0, criterion_gray_identities},
        {2, "isometry of the Gray map", 1.0, criterion_isometry},
        {3, "Example 1 rank witnesses by both methods", 30.0, criterion_example1},
        {4, "Example 2 kernel witnesses, coset vs brute force", 120.0, criterion_example2},
        {5, "Table 1 reproduction with verified cells", 600.0, criterion_table1},
        {6, "rank and kernel oracle equivalence on random types", 300.0,
         criterion_oracle_equivalence},
        {7, "duality pairing, sizes and types", 120.0, criterion_duality},
        {8, "linearity coupling on constructed witnesses", 120.0,
         criterion_linearity_coupling},
        {9, "standardization of scrambled matrices", 60.0, criterion_standardization},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = seconds < c.budget_seconds;
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.label
             << " — " << detail;
        if (!in_budget) line << " [over budget " << c.budget_seconds << "s]";
        line.setf(std::ios::fixed);
        line.precision(1);
        line << " (" << seconds << "s)";
        std::cout << line.str() << std::endl;
    }
    std::cout << (failures == 0 ? "acceptance: all 9 criteria passed"
                                : "acceptance: " + std::to_string(failures) + " failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
