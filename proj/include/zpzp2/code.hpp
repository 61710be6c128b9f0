#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "zpzp2/word.hpp"

namespace zpzp2 {

// Type (alpha, beta; gamma, delta; kappa) of an additive code:
// gamma generators of order p, delta of order p^2, kappa the Z_p-dimension
// of the X projection of the order-p subcode. |C| = p^(gamma + 2*delta).
struct CodeType {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
    int delta = 0;
    int kappa = 0;

    // alpha + beta > 0, 0 < gamma + delta <= beta + kappa,
    // kappa <= min(alpha, gamma), and alpha = 0 forces kappa = 0.
    bool satisfies_parameter_conditions() const;

    int size_exponent() const { return gamma + 2 * delta; }
    int subcode_exponent() const { return gamma + delta; }  // order-p subcode

    // (alpha, beta; alpha + gamma - 2*kappa, beta - gamma - delta + kappa;
    //  alpha - kappa).
    CodeType dual_type() const;

    friend bool operator==(const CodeType&, const CodeType&) = default;
};

class GeneratorMatrix;

// Row reduction over the mixed alphabet with three pivot families:
//   - unit pivots: rows of order p^2, pivot entry normalized to 1; every
//     other row holds 0 in that column,
//   - X pivots: order-p rows with a nonzero X entry, normalized to 1,
//   - pZ pivots: order-p rows living entirely in pZ on the Y side, pivot
//     normalized to p; order-p rows hold 0 there, unit-pivot rows are only
//     reduced mod p (their residue is part of the generated group).
// Batch reduction picks pivots row-major (lowest row index, then lowest
// column). Rows may also be fed one at a time; dependent rows are detected
// and skipped, so the reducer doubles as a span-membership filter.
class RowReducer {
  public:
    RowReducer(Prime p, Shape shape);

    // Batch-reduce the given rows from scratch (dependent rows drop out).
    void reduce(std::vector<MixedWord> rows);

    // True when w lies in the span of the current basis.
    bool in_span(const MixedWord& w) const;

    // Absorbs w unless dependent; returns whether the span grew.
    bool insert(MixedWord w);

    int gamma() const;
    int delta() const { return static_cast<int>(unit_rows_.size()); }
    int kappa() const { return static_cast<int>(x_rows_.size()); }
    int pivot_count() const { return gamma() + delta(); }
    int inserted_count() const { return inserted_; }

    // Rows in standard order: X-pivot rows, pZ-pivot rows, unit-pivot rows.
    std::vector<MixedWord> basis_rows() const;

    const std::vector<int>& x_pivot_cols() const { return x_cols_; }
    const std::vector<int>& pz_pivot_cols() const { return pz_cols_; }
    const std::vector<int>& unit_pivot_cols() const { return unit_cols_; }

  private:
    void rebuild(std::vector<MixedWord> rows);
    void reduce_in_place(MixedWord& w) const;

    Prime p_;
    Shape shape_;
    int inserted_ = 0;
    std::vector<MixedWord> x_rows_, pz_rows_, unit_rows_;
    std::vector<int> x_cols_, pz_cols_, unit_cols_;
};

// Validated generator matrix: independent nonzero rows over a fixed shape,
// classified by additive order (order-p rows first, then order-p^2 rows;
// relative input order preserved within each class).
class GeneratorMatrix {
  public:
    GeneratorMatrix(Prime p, Shape shape, std::vector<MixedWord> rows);

    Prime prime() const { return p_; }
    Shape shape() const { return shape_; }
    const std::vector<MixedWord>& order_p_rows() const { return u_rows_; }
    const std::vector<MixedWord>& order_p2_rows() const { return v_rows_; }
    std::vector<MixedWord> all_rows() const;
    int row_count() const { return static_cast<int>(u_rows_.size() + v_rows_.size()); }

  private:
    Prime p_;
    Shape shape_;
    std::vector<MixedWord> u_rows_;
    std::vector<MixedWord> v_rows_;
};

using IntMatrix = std::vector<std::vector<int>>;

// Standard form
//   ( I_k  T' | pT2   0        0   )
//   ( 0    0  | pT1   pI_{g-k} 0   )
//   ( 0    S' | S     R        I_d )
// reached by row operations plus a column permutation within each block.
struct StandardForm {
    // new_position[original_position]; X columns map to X positions,
    // Y columns to Y positions.
    std::vector<int> column_permutation;
    CodeType type;
    std::vector<MixedWord> rows;  // standard row order

    IntMatrix t_prime;  // kappa x (alpha - kappa), over Z_p
    IntMatrix t2;       // kappa x s, over Z_p (the pT2 block divided by p)
    IntMatrix t1;       // (gamma - kappa) x s, over Z_p
    IntMatrix s_prime;  // delta x (alpha - kappa), over Z_p
    IntMatrix s_block;  // delta x s, over Z_{p^2}
    IntMatrix r_block;  // delta x (gamma - kappa), over Z_p

    GeneratorMatrix to_matrix(Prime p, Shape shape) const;
};

CodeType compute_type(const GeneratorMatrix& g);
StandardForm standardize(const GeneratorMatrix& g);

MixedWord apply_column_permutation(const std::vector<int>& perm, const MixedWord& w);

// Reduce an arbitrary (possibly dependent, possibly zero-containing) row
// list to an independent generating set for the same group.
std::vector<MixedWord> reduce_rows(Prime p, Shape shape, const std::vector<MixedWord>& rows);

// Fixed-width bit packing of a word into a uint64 key: alpha fields of
// bit_width(p-1) bits, then beta fields of bit_width(p^2-1) bits. No field
// can be all-ones (p and p^2 are never powers of two), so an all-ones key
// is free to act as the hash-table empty slot.
struct PackSpec {
    int alpha = 0, beta = 0;
    int bits_x = 0, bits_y = 0;
    int total_bits = 0;

    static PackSpec make(Prime p, Shape shape);
    bool fits_u64() const { return total_bits <= 64; }
    std::uint64_t pack(const MixedWord& w) const;
    MixedWord unpack(std::uint64_t key, Prime p) const;
};

// Open-addressing set of packed word keys.
class KeySet {
  public:
    explicit KeySet(std::uint64_t expected = 0);
    void insert(std::uint64_t key);           // no-op on duplicates
    bool contains(std::uint64_t key) const;
    std::uint64_t size() const { return count_; }

  private:
    void grow();
    std::vector<std::uint64_t> slots_;
    std::uint64_t mask_ = 0;
    std::uint64_t count_ = 0;
};

// Exhaustive membership index over the codeword set. Words are stored by
// packed key when the shape fits in 64 bits (every workload in scope does);
// a byte-string fallback covers wider shapes.
class MembershipIndex {
  public:
    static MembershipIndex build(const GeneratorMatrix& g, std::uint64_t cap);

    std::uint64_t size() const { return count_; }
    bool contains_word(const MixedWord& w) const;

    // Membership of a Z_p vector in the Gray image: decode blockwise
    // (each Y block must be an arithmetic progression) and probe.
    bool contains_gray(std::span<const std::uint8_t> g) const;

    const PackSpec& pack() const { return pack_; }
    bool packed() const { return pack_.fits_u64(); }

  private:
    MembershipIndex(Prime p, Shape shape);
    Prime p_;
    Shape shape_;
    PackSpec pack_;
    std::uint64_t count_ = 0;
    KeySet keys_;
    std::unordered_set<std::string> wide_keys_;
    bool duplicate_seen_ = false;
    friend class AdditiveCode;
};

// The additive code generated by a matrix. Immutable; the membership index
// is built lazily on first use and reused.
class AdditiveCode {
  public:
    explicit AdditiveCode(GeneratorMatrix g);

    Prime prime() const { return gens_.prime(); }
    Shape shape() const { return gens_.shape(); }
    const GeneratorMatrix& generators() const { return gens_; }
    const CodeType& type() const { return type_; }

    unsigned __int128 size() const;
    std::string size_string() const;  // "p^e" form, e.g. "3^10"

    const MembershipIndex& index(std::uint64_t cap = kDefaultEnumerationCap) const;
    bool contains(const MixedWord& w, std::uint64_t cap = kDefaultEnumerationCap) const;

  private:
    GeneratorMatrix gens_;
    CodeType type_;
    mutable std::shared_ptr<const MembershipIndex> index_;
};

// Annihilator of C under the inner product: all ambient words with zero
// product against every generator. Walks the whole ambient group, so
// p^(alpha + 2*beta) must not exceed the cap.
AdditiveCode dual(const AdditiveCode& c, std::uint64_t cap = kDefaultEnumerationCap);

// Visit every codeword exactly once (coefficient odometer over the
// generator rows; deterministic order, shared by the index and all sweeps).
namespace detail {
void walk_codewords(const GeneratorMatrix& g,
                    const std::function<void(const MixedWord&)>& visit);
}

}  // namespace zpzp2
