#include "zpzp2/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "zpzp2/analysis.hpp"
#include "zpzp2/code.hpp"
#include "zpzp2/construct.hpp"
#include "zpzp2/gray.hpp"
#include "zpzp2/io.hpp"
#include "zpzp2/ring.hpp"
#include "zpzp2/word.hpp"

namespace zpzp2 {

namespace {

struct TypeArgs {
    int p = 3;
    int alpha = 0, beta = 0, gamma = 0, delta = 0, kappa = 0;
    CodeType type() const { return CodeType{alpha, beta, gamma, delta, kappa}; }
};

void add_type_flags(CLI::App* sub, TypeArgs& t) {
    sub->add_option("--p", t.p, "odd prime in [3, 97]")->required();
    sub->add_option("--alpha", t.alpha, "length of the Z_p block")->required();
    sub->add_option("--beta", t.beta, "length of the Z_{p^2} block")->required();
    sub->add_option("--gamma", t.gamma, "number of order-p generators")->required();
    sub->add_option("--delta", t.delta, "number of order-p^2 generators")->required();
    sub->add_option("--kappa", t.kappa, "X-projection dimension of the order-p subcode")
        ->required();
}

RankMethod to_rank_method(const std::string& s) {
    if (s == "span") return RankMethod::kSpanElimination;
    if (s == "bruteforce") return RankMethod::kBruteForce;
    return RankMethod::kAuto;
}

KernelMethod to_kernel_method(const std::string& s) {
    if (s == "coset") return KernelMethod::kCoset;
    if (s == "bruteforce") return KernelMethod::kBruteForce;
    return KernelMethod::kAuto;
}

std::pair<int, int> parse_pair_target(const std::string& s) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("--pair expects two integers \"r,k\"");
    auto to_int = [](const std::string& token) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("--pair entry \"" + token + "\" is not an integer");
        }
        if (used != token.size())
            throw std::invalid_argument("--pair entry \"" + token + "\" is not an integer");
        return v;
    };
    return {to_int(s.substr(0, comma)), to_int(s.substr(comma + 1))};
}

int choose2(int n) { return n < 2 ? 0 : n * (n - 1) / 2; }
int choose3(int n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

AdditiveCode load_code(const std::string& path) {
    CodeFile f = load_code_file(path);
    return AdditiveCode(GeneratorMatrix(f.p, f.shape, std::move(f.rows)));
}

int cmd_construct(const TypeArgs& ta, const CLI::Option* rank_opt, int rank,
                  const CLI::Option* kernel_opt, int kernel, const std::string& pair_arg,
                  const std::string& out_path, std::ostream& out) {
    Prime p(ta.p);
    CodeType t = ta.type();
    GeneratorMatrix g = [&] {
        if (rank_opt->count()) return build_rank_witness(p, t, rank);
        if (kernel_opt->count()) return build_kernel_witness(p, t, kernel);
        auto [r, k] = parse_pair_target(pair_arg);
        return build_pair_witness(p, t, r, k);
    }();
    save_code_file(out_path, p, g.shape(), g.all_rows());
    out << "type " << format_type(compute_type(g)) << "\n";
    out << "rows " << g.row_count() << "\n";
    out << "wrote " << out_path << "\n";
    return 0;
}

int cmd_analyze(const std::string& path, const std::string& rank_method,
                const std::string& kernel_method, bool min_dist, std::uint64_t cap,
                std::ostream& out) {
    AdditiveCode c = load_code(path);
    RankReport rr = compute_rank(c, to_rank_method(rank_method), cap);
    KernelReport kr = compute_kernel(c, to_kernel_method(kernel_method), cap);
    out << "type " << format_type(c.type()) << "\n";
    out << "size " << c.size_string() << "\n";
    out << "rank " << rr.rank << "\n";
    out << "rank_excess " << rr.rank_excess << "\n";
    out << "rank_method " << rank_method_name(rr.method) << "\n";
    out << "kernel_dim " << kr.kernel_dim << "\n";
    out << "kernel_deficit " << kr.kernel_deficit << "\n";
    out << "kernel_method " << kernel_method_name(kr.method) << "\n";
    out << "linear " << (kr.kernel_deficit == 0 ? "true" : "false") << "\n";
    if (min_dist) out << "min_distance " << min_hamming_distance(c, cap) << "\n";
    return 0;
}

int cmd_table(const TypeArgs& ta, bool verify, std::uint64_t cap, std::ostream& out,
              std::ostream& err) {
    Prime p(ta.p);
    CodeType t = ta.type();
    AchievabilityTable tab = achievability_table(p, t);
    if (verify) {
        for (std::size_t i = 0; i < tab.kernel_dims.size(); ++i) {
            for (std::size_t j = 0; j < tab.ranks.size(); ++j) {
                if (!tab.achievable[i][j]) continue;
                int r = tab.ranks[j];
                int k = tab.kernel_dims[i];
                AdditiveCode c(build_pair_witness(p, t, r, k));
                if (c.type() != t) {
                    err << "verify failed: cell (r=" << r << ", k=" << k
                        << ") constructed type " << format_type(c.type())
                        << " instead of " << format_type(t) << "\n";
                    return 1;
                }
                RankReport rr = compute_rank(c, RankMethod::kSpanElimination, cap);
                KernelReport kr = compute_kernel(c, KernelMethod::kCoset, cap);
                if (rr.rank != r || kr.kernel_dim != k) {
                    err << "verify failed: cell (r=" << r << ", k=" << k
                        << ") analyzed to (r=" << rr.rank << ", k=" << kr.kernel_dim
                        << ")\n";
                    return 1;
                }
            }
        }
    }
    out << render_table_csv(tab);
    return 0;
}

int cmd_dual(const std::string& path, const std::string& out_path, std::uint64_t cap,
             std::ostream& out) {
    AdditiveCode c = load_code(path);
    AdditiveCode d = dual(c, cap);
    save_code_file(out_path, d.prime(), d.shape(), d.generators().all_rows());
    out << "type " << format_type(c.type()) << "\n";
    out << "dual_type " << format_type(d.type()) << "\n";
    out << "wrote " << out_path << "\n";
    return 0;
}

int cmd_gray(int p_value, const std::string& word, std::ostream& out) {
    Prime p(p_value);
    MixedWord w = parse_word_literal(p, word);
    out << format_gray(big_phi(w)) << "\n";
    return 0;
}

// Cross-checks everything the library claims about one code: parameter
// conditions, enumerated size, rank and kernel by two independent methods,
// the coset partition of the Gray image, the linearity coupling, and the
// dual pairing. Quadratic checks are skipped above their stated limits.
int cmd_verify(const std::string& path, std::uint64_t cap, std::ostream& out) {
    constexpr std::uint64_t kBruteKernelLimit = 6561;
    AdditiveCode c = load_code(path);
    bool all_ok = true;
    auto check = [&](const char* label, bool pass, const std::string& detail) {
        out << (pass ? "ok " : "FAIL ") << label;
        if (!detail.empty()) out << " " << detail;
        out << "\n";
        if (!pass) all_ok = false;
    };

    const CodeType& t = c.type();
    check("type", t.satisfies_parameter_conditions(), format_type(t));
    c.index(cap);  // throws unless exactly p^(gamma+2delta) distinct words
    check("size", true, c.size_string());

    int pv = c.prime().value();
    RankReport ra = compute_rank(c, RankMethod::kAuto, cap);
    RankReport rb = compute_rank(c, RankMethod::kBruteForce, cap);
    check("rank", ra.rank == rb.rank,
          std::to_string(rb.rank) + (pv == 3 ? " (span == brute)" : " (brute)"));
    int rank_hi = t.alpha + pv * t.beta;
    if (pv == 3)
        rank_hi = std::min(rank_hi,
                           std::min(t.beta + t.delta + t.kappa,
                                    t.gamma + t.delta + choose2(t.delta + 1) +
                                        choose3(t.delta + 2)));
    check("rank_bounds", rb.rank >= t.size_exponent() && rb.rank <= rank_hi,
          std::to_string(t.size_exponent()) + " <= " + std::to_string(rb.rank) +
              " <= " + std::to_string(rank_hi));

    KernelReport ka = compute_kernel(c, KernelMethod::kCoset, cap);
    if (c.size() <= kBruteKernelLimit) {
        KernelReport kb = compute_kernel(c, KernelMethod::kBruteForce, cap);
        check("kernel", ka.kernel_dim == kb.kernel_dim,
              std::to_string(ka.kernel_dim) + " (coset == brute)");
    } else {
        check("kernel", true,
              std::to_string(ka.kernel_dim) + " (coset; brute skipped for size)");
    }
    check("kernel_bounds",
          ka.kernel_dim >= t.subcode_exponent() && ka.kernel_dim <= t.size_exponent(),
          std::to_string(t.subcode_exponent()) + " <= " + std::to_string(ka.kernel_dim) +
              " <= " + std::to_string(t.size_exponent()));
    check("coset_decomposition", check_coset_decomposition(c, ka, cap), "");

    bool lin = is_gray_linear(c, cap);
    check("linearity_coupling",
          lin == (ka.kernel_deficit == 0) && lin == (rb.rank_excess == 0),
          lin ? "linear" : "nonlinear");

    if (pow_u128(pv, t.alpha + 2 * t.beta) <= cap) {
        AdditiveCode d = dual(c, cap);
        bool type_ok = d.type() == t.dual_type();
        bool size_ok =
            d.type().size_exponent() + t.size_exponent() == t.alpha + 2 * t.beta;
        bool orthogonal = true;
        for (const MixedWord& a : c.generators().all_rows())
            for (const MixedWord& b : d.generators().all_rows())
                if (inner_product(a, b) != 0) orthogonal = false;
        check("dual", type_ok && size_ok && orthogonal, format_type(d.type()));
    } else {
        out << "ok dual skipped (ambient above cap)\n";
    }

    out << (all_ok ? "verify PASS\n" : "verify FAIL\n");
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Additive codes over Z_p x Z_{p^2}: constructions, Gray images, "
        "rank/kernel analysis, duality"};
    app.name("zpzp2");
    app.require_subcommand(1);

    TypeArgs con_type;
    int con_rank = 0, con_kernel = 0;
    std::string con_pair, con_out;
    CLI::App* con = app.add_subcommand("construct", "build a witness generator matrix");
    add_type_flags(con, con_type);
    CLI::App* target = con->add_option_group("target", "exactly one construction target");
    CLI::Option* rank_opt = target->add_option("--rank", con_rank, "target rank (p = 3)");
    CLI::Option* kernel_opt =
        target->add_option("--kernel", con_kernel, "target kernel dimension");
    target->add_option("--pair", con_pair, "target \"r,k\" pair (p = 3)");
    target->require_option(1);
    con->add_option("-o,--output", con_out, "output code file")->required();

    std::string ana_file, ana_rank_method = "auto", ana_kernel_method = "auto";
    bool ana_min_dist = false;
    std::uint64_t ana_cap = kDefaultEnumerationCap;
    CLI::App* ana = app.add_subcommand("analyze", "report the invariants of a code file");
    ana->add_option("file", ana_file, "code file")->required();
    ana->add_option("--rank-method", ana_rank_method, "span | bruteforce | auto")
        ->check(CLI::IsMember({"span", "bruteforce", "auto"}));
    ana->add_option("--kernel-method", ana_kernel_method, "coset | bruteforce | auto")
        ->check(CLI::IsMember({"coset", "bruteforce", "auto"}));
    ana->add_flag("--min-dist", ana_min_dist, "also report the minimum distance");
    ana->add_option("--cap", ana_cap, "enumeration cap");

    TypeArgs tab_type;
    bool tab_verify = false;
    std::uint64_t tab_cap = kDefaultEnumerationCap;
    CLI::App* tab = app.add_subcommand("table", "emit the (rank, kernel) grid as CSV");
    add_type_flags(tab, tab_type);
    tab->add_flag("--verify", tab_verify, "construct and analyze every achievable cell");
    tab->add_option("--cap", tab_cap, "enumeration cap");

    std::string dual_file, dual_out;
    std::uint64_t dual_cap = kDefaultEnumerationCap;
    CLI::App* dua = app.add_subcommand("dual", "compute the dual code");
    dua->add_option("file", dual_file, "code file")->required();
    dua->add_option("-o,--output", dual_out, "output code file")->required();
    dua->add_option("--cap", dual_cap, "enumeration cap (ambient group)");

    int gray_p = 3;
    std::string gray_word;
    CLI::App* gra = app.add_subcommand("gray", "print the Gray image of one word");
    gra->add_option("--p", gray_p, "odd prime in [3, 97]")->required();
    gra->add_option("--word", gray_word, "word literal \"x1,..|y1,..\"")->required();

    std::string ver_file;
    std::uint64_t ver_cap = kDefaultEnumerationCap;
    CLI::App* ver = app.add_subcommand("verify", "cross-check all invariants of a code file");
    ver->add_option("file", ver_file, "code file")->required();
    ver->add_option("--cap", ver_cap, "enumeration cap");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (con->parsed())
            return cmd_construct(con_type, rank_opt, con_rank, kernel_opt, con_kernel,
                                 con_pair, con_out, out);
        if (ana->parsed())
            return cmd_analyze(ana_file, ana_rank_method, ana_kernel_method, ana_min_dist,
                               ana_cap, out);
        if (tab->parsed()) return cmd_table(tab_type, tab_verify, tab_cap, out, err);
        if (dua->parsed()) return cmd_dual(dual_file, dual_out, dual_cap, out);
        if (gra->parsed()) return cmd_gray(gray_p, gray_word, out);
        if (ver->parsed()) return cmd_verify(ver_file, ver_cap, out);
        err << "error: no command selected\n";
        return 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace zpzp2
