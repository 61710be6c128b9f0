#include "zpzp2/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "zpzp2/gray.hpp"
#include "zpzp2/kernels.hpp"

namespace zpzp2 {

bool CodeType::satisfies_parameter_conditions() const {
    if (alpha < 0 || beta < 0 || gamma < 0 || delta < 0 || kappa < 0) return false;
    if (alpha + beta <= 0) return false;
    if (gamma + delta <= 0) return false;
    if (gamma + delta > beta + kappa) return false;
    if (kappa > alpha || kappa > gamma) return false;
    if (alpha == 0 && kappa != 0) return false;
    return true;
}

CodeType CodeType::dual_type() const {
    return {alpha, beta, alpha + gamma - 2 * kappa, beta - gamma - delta + kappa,
            alpha - kappa};
}

GeneratorMatrix::GeneratorMatrix(Prime p, Shape shape, std::vector<MixedWord> rows)
    : p_(p), shape_(shape) {
    if (shape.alpha < 0 || shape.beta < 0 || shape.alpha + shape.beta <= 0)
        throw std::invalid_argument("shape must have alpha + beta > 0");
    RowReducer red(p, shape);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const MixedWord& w = rows[i];
        if (w.shape() != shape || w.prime() != p)
            throw std::invalid_argument("row " + std::to_string(i) +
                                        " does not match the declared shape");
        if (w.is_zero())
            throw std::invalid_argument("row " + std::to_string(i) + " is zero");
        if (!red.insert(w))
            throw std::invalid_argument("row " + std::to_string(i) +
                                        " is dependent on earlier rows");
    }
    if (red.pivot_count() != static_cast<int>(rows.size()))
        throw std::invalid_argument("generator rows are not independent");
    for (MixedWord& w : rows) {
        if (word_order(w) == p.value())
            u_rows_.push_back(std::move(w));
        else
            v_rows_.push_back(std::move(w));
    }
}

std::vector<MixedWord> GeneratorMatrix::all_rows() const {
    std::vector<MixedWord> rows = u_rows_;
    rows.insert(rows.end(), v_rows_.begin(), v_rows_.end());
    return rows;
}

CodeType compute_type(const GeneratorMatrix& g) {
    RowReducer red(g.prime(), g.shape());
    red.reduce(g.all_rows());
    return {g.shape().alpha, g.shape().beta, red.gamma(), red.delta(), red.kappa()};
}

MixedWord apply_column_permutation(const std::vector<int>& perm, const MixedWord& w) {
    int alpha = w.alpha(), beta = w.beta();
    if (static_cast<int>(perm.size()) != alpha + beta)
        throw std::invalid_argument("permutation length mismatch");
    MixedWord out(w.prime(), w.shape());
    for (int i = 0; i < alpha; ++i) out.set_x(perm[i], w.x(i));
    for (int j = 0; j < beta; ++j) out.set_y(perm[alpha + j] - alpha, w.y(j));
    return out;
}

StandardForm standardize(const GeneratorMatrix& g) {
    Prime p = g.prime();
    Shape shape = g.shape();
    RowReducer red(p, shape);
    red.reduce(g.all_rows());

    int alpha = shape.alpha, beta = shape.beta;
    int gamma = red.gamma(), delta = red.delta(), kappa = red.kappa();
    int s = beta - (gamma - kappa) - delta;

    StandardForm sf;
    sf.type = {alpha, beta, gamma, delta, kappa};

    // X columns: pivots first (pivot order), the rest ascending.
    std::vector<int> perm(alpha + beta, -1);
    {
        int next = 0;
        for (int c : red.x_pivot_cols()) perm[c] = next++;
        for (int i = 0; i < alpha; ++i)
            if (perm[i] < 0) perm[i] = next++;
    }
    // Y columns: free ascending, then pZ pivots, then unit pivots.
    {
        std::vector<int> ypos(beta, -1);
        int base_pz = s, base_unit = s + (gamma - kappa);
        for (std::size_t k = 0; k < red.pz_pivot_cols().size(); ++k)
            ypos[red.pz_pivot_cols()[k]] = base_pz + static_cast<int>(k);
        for (std::size_t k = 0; k < red.unit_pivot_cols().size(); ++k)
            ypos[red.unit_pivot_cols()[k]] = base_unit + static_cast<int>(k);
        int next = 0;
        for (int j = 0; j < beta; ++j)
            if (ypos[j] < 0) ypos[j] = next++;
        for (int j = 0; j < beta; ++j) perm[alpha + j] = alpha + ypos[j];
    }
    sf.column_permutation = perm;

    for (const MixedWord& w : red.basis_rows())
        sf.rows.push_back(apply_column_permutation(perm, w));

    // Named blocks, read off the permuted rows.
    auto slice_x = [&](int row_lo, int row_hi) {
        IntMatrix m;
        for (int r = row_lo; r < row_hi; ++r) {
            std::vector<int> row;
            for (int i = kappa; i < alpha; ++i) row.push_back(sf.rows[r].x(i));
            m.push_back(std::move(row));
        }
        return m;
    };
    auto slice_y = [&](int row_lo, int row_hi, int col_lo, int col_hi, int divide) {
        IntMatrix m;
        for (int r = row_lo; r < row_hi; ++r) {
            std::vector<int> row;
            for (int j = col_lo; j < col_hi; ++j) row.push_back(sf.rows[r].y(j) / divide);
            m.push_back(std::move(row));
        }
        return m;
    };
    int pv = p.value();
    sf.t_prime = slice_x(0, kappa);
    sf.t2 = slice_y(0, kappa, 0, s, pv);
    sf.t1 = slice_y(kappa, gamma, 0, s, pv);
    sf.s_prime = slice_x(gamma, gamma + delta);
    sf.s_block = slice_y(gamma, gamma + delta, 0, s, 1);
    sf.r_block = slice_y(gamma, gamma + delta, s, s + gamma - kappa, 1);
    return sf;
}

GeneratorMatrix StandardForm::to_matrix(Prime p, Shape shape) const {
    return GeneratorMatrix(p, shape, rows);
}

// ---------------------------------------------------------------------------
// Packing and membership.

namespace {

int bit_width_of(int v) {
    int b = 0;
    while ((1 << b) <= v) ++b;
    return b;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string wide_key(const MixedWord& w) {
    std::string k;
    k.reserve(w.alpha() + 2 * w.beta());
    for (int i = 0; i < w.alpha(); ++i) k.push_back(static_cast<char>(w.x(i)));
    for (int j = 0; j < w.beta(); ++j) {
        k.push_back(static_cast<char>(w.y(j) & 0xff));
        k.push_back(static_cast<char>(w.y(j) >> 8));
    }
    return k;
}

}  // namespace

PackSpec PackSpec::make(Prime p, Shape shape) {
    PackSpec ps;
    ps.alpha = shape.alpha;
    ps.beta = shape.beta;
    ps.bits_x = bit_width_of(p.value() - 1);
    ps.bits_y = bit_width_of(p.squared() - 1);
    ps.total_bits = ps.alpha * ps.bits_x + ps.beta * ps.bits_y;
    return ps;
}

std::uint64_t PackSpec::pack(const MixedWord& w) const {
    std::uint64_t key = 0;
    int shift = 0;
    for (int i = 0; i < alpha; ++i) {
        key |= static_cast<std::uint64_t>(w.x(i)) << shift;
        shift += bits_x;
    }
    for (int j = 0; j < beta; ++j) {
        key |= static_cast<std::uint64_t>(w.y(j)) << shift;
        shift += bits_y;
    }
    return key;
}

MixedWord PackSpec::unpack(std::uint64_t key, Prime p) const {
    MixedWord w(p, Shape{alpha, beta});
    int shift = 0;
    std::uint64_t mx = (std::uint64_t{1} << bits_x) - 1;
    std::uint64_t my = (std::uint64_t{1} << bits_y) - 1;
    for (int i = 0; i < alpha; ++i) {
        w.set_x(i, static_cast<int>((key >> shift) & mx));
        shift += bits_x;
    }
    for (int j = 0; j < beta; ++j) {
        w.set_y(j, static_cast<int>((key >> shift) & my));
        shift += bits_y;
    }
    return w;
}

KeySet::KeySet(std::uint64_t expected) {
    std::uint64_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, ~std::uint64_t{0});
    mask_ = cap - 1;
}

void KeySet::grow() {
    std::vector<std::uint64_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, ~std::uint64_t{0});
    mask_ = slots_.size() - 1;
    count_ = 0;
    for (std::uint64_t k : old)
        if (k != ~std::uint64_t{0}) insert(k);
}

void KeySet::insert(std::uint64_t key) {
    if (2 * (count_ + 1) > slots_.size()) grow();
    std::uint64_t i = splitmix64(key) & mask_;
    while (slots_[i] != ~std::uint64_t{0}) {
        if (slots_[i] == key) return;
        i = (i + 1) & mask_;
    }
    slots_[i] = key;
    ++count_;
}

bool KeySet::contains(std::uint64_t key) const {
    std::uint64_t i = splitmix64(key) & mask_;
    while (slots_[i] != ~std::uint64_t{0}) {
        if (slots_[i] == key) return true;
        i = (i + 1) & mask_;
    }
    return false;
}

MembershipIndex::MembershipIndex(Prime p, Shape shape)
    : p_(p), shape_(shape), pack_(PackSpec::make(p, shape)) {}

MembershipIndex MembershipIndex::build(const GeneratorMatrix& g, std::uint64_t cap) {
    CodeType t = compute_type(g);
    unsigned __int128 size = pow_u128(g.prime().value(), t.size_exponent());
    if (size > cap)
        throw CapExceeded("code has " + std::to_string(g.prime().value()) + "^" +
                          std::to_string(t.size_exponent()) +
                          " codewords, above the enumeration cap " + std::to_string(cap));

    MembershipIndex idx(g.prime(), g.shape());
    if (idx.pack_.fits_u64()) {
        idx.keys_ = KeySet(static_cast<std::uint64_t>(size));
        detail::walk_codewords(g, [&](const MixedWord& w) {
            std::uint64_t before = idx.keys_.size();
            idx.keys_.insert(idx.pack_.pack(w));
            if (idx.keys_.size() == before) idx.duplicate_seen_ = true;
        });
        idx.count_ = idx.keys_.size();
    } else {
        detail::walk_codewords(g, [&](const MixedWord& w) {
            if (!idx.wide_keys_.insert(wide_key(w)).second) idx.duplicate_seen_ = true;
        });
        idx.count_ = idx.wide_keys_.size();
    }
    if (idx.duplicate_seen_ || idx.count_ != static_cast<std::uint64_t>(size))
        throw std::logic_error("enumeration visited a codeword twice");
    return idx;
}

bool MembershipIndex::contains_word(const MixedWord& w) const {
    if (w.shape() != shape_ || w.prime() != p_)
        throw std::invalid_argument("word shape/prime mismatch");
    if (pack_.fits_u64()) return keys_.contains(pack_.pack(w));
    return wide_keys_.count(wide_key(w)) != 0;
}

bool MembershipIndex::contains_gray(std::span<const std::uint8_t> g) const {
    int p = p_.value();
    if (static_cast<int>(g.size()) != shape_.alpha + p * shape_.beta)
        throw std::invalid_argument("Gray vector length mismatch");
    // Decode without constructing a word: X entries verbatim, each Y block
    // must be an arithmetic progression (hi, hi+lo, hi+2lo, ...) mod p.
    std::uint64_t key = 0;
    std::string wkey;
    bool packed64 = pack_.fits_u64();
    if (!packed64) wkey.reserve(shape_.alpha + 2 * shape_.beta);
    int shift = 0;
    for (int i = 0; i < shape_.alpha; ++i) {
        if (g[i] >= p) return false;
        if (packed64) {
            key |= static_cast<std::uint64_t>(g[i]) << shift;
            shift += pack_.bits_x;
        } else {
            wkey.push_back(static_cast<char>(g[i]));
        }
    }
    for (int j = 0; j < shape_.beta; ++j) {
        const std::uint8_t* b = g.data() + shape_.alpha + j * p;
        int hi = b[0];
        if (hi >= p || b[1] >= p) return false;
        int lo = b[1] - hi;
        if (lo < 0) lo += p;
        int v = b[1];
        for (int i = 2; i < p; ++i) {
            v += lo;
            if (v >= p) v -= p;
            if (b[i] != v) return false;
        }
        int theta = hi * p + lo;
        if (packed64) {
            key |= static_cast<std::uint64_t>(theta) << shift;
            shift += pack_.bits_y;
        } else {
            wkey.push_back(static_cast<char>(theta & 0xff));
            wkey.push_back(static_cast<char>(theta >> 8));
        }
    }
    if (packed64) return keys_.contains(key);
    return wide_keys_.count(wkey) != 0;
}

AdditiveCode::AdditiveCode(GeneratorMatrix g) : gens_(std::move(g)), type_(compute_type(gens_)) {}

unsigned __int128 AdditiveCode::size() const {
    return pow_u128(prime().value(), type_.size_exponent());
}

std::string AdditiveCode::size_string() const {
    return std::to_string(prime().value()) + "^" + std::to_string(type_.size_exponent());
}

const MembershipIndex& AdditiveCode::index(std::uint64_t cap) const {
    if (!index_)
        index_ = std::make_shared<const MembershipIndex>(MembershipIndex::build(gens_, cap));
    return *index_;
}

bool AdditiveCode::contains(const MixedWord& w, std::uint64_t cap) const {
    return index(cap).contains_word(w);
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace detail {

namespace {

void add_in_place(MixedWord& a, const MixedWord& b) {
    const auto& k = kernels::active();
    k.add_mod_u8(a.x_data().data(), b.x_data().data(), a.x_raw(), a.x_data().size(),
                 static_cast<std::uint8_t>(a.prime().value()));
    k.add_mod_u16(a.y_data().data(), b.y_data().data(), a.y_raw(), a.y_data().size(),
                  static_cast<std::uint16_t>(a.prime().squared()));
}

}  // namespace

void walk_codewords(const GeneratorMatrix& g,
                    const std::function<void(const MixedWord&)>& visit) {
    Prime p = g.prime();
    std::vector<MixedWord> rows = g.all_rows();
    const int m = static_cast<int>(rows.size());
    MixedWord zero(p, g.shape());
    if (m == 0) {
        visit(zero);
        return;
    }
    // Coefficient odometer, last digit fastest: order-p rows take
    // coefficients in [0, p), order-p^2 rows in [0, p^2). prefix[i] is the
    // partial sum of the first i generator contributions, so one digit
    // increment costs a single word add.
    std::vector<int> radix(m), d(m, 0);
    for (int i = 0; i < m; ++i) radix[i] = word_order(rows[i]);
    std::vector<MixedWord> prefix(m + 1, zero);
    while (true) {
        visit(prefix[m]);
        int j = m - 1;
        while (j >= 0 && d[j] == radix[j] - 1) {
            d[j] = 0;
            --j;
        }
        if (j < 0) break;
        ++d[j];
        add_in_place(prefix[j + 1], rows[j]);
        for (int i = j + 1; i < m; ++i) prefix[i + 1] = prefix[i];
    }
}

}  // namespace detail

}  // namespace zpzp2
