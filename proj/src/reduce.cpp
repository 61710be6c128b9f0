#include <stdexcept>
#include <string>

#include "zpzp2/code.hpp"

namespace zpzp2 {

namespace {

// w -= c * row, shapes already checked.
void subtract_multiple(MixedWord& w, int c, const MixedWord& row) {
    if (c == 0) return;
    w = sub(w, scale(c, row));
}

}  // namespace

RowReducer::RowReducer(Prime p, Shape shape) : p_(p), shape_(shape) {}

int RowReducer::gamma() const {
    return static_cast<int>(x_rows_.size() + pz_rows_.size());
}

std::vector<MixedWord> RowReducer::basis_rows() const {
    std::vector<MixedWord> rows;
    rows.reserve(x_rows_.size() + pz_rows_.size() + unit_rows_.size());
    rows.insert(rows.end(), x_rows_.begin(), x_rows_.end());
    rows.insert(rows.end(), pz_rows_.begin(), pz_rows_.end());
    rows.insert(rows.end(), unit_rows_.begin(), unit_rows_.end());
    return rows;
}

// Reduces w by the pivot rows with exact coefficients. Unit pivots hold 1
// in their column and every other basis row holds 0 there, so the unit-row
// coefficient of any group element is forced; same for X pivots mod p and
// pZ pivots (after dividing the entry by p). w is in the span exactly when
// the residue vanishes.
void RowReducer::reduce_in_place(MixedWord& w) const {
    for (std::size_t k = 0; k < unit_rows_.size(); ++k)
        subtract_multiple(w, w.y(unit_cols_[k]), unit_rows_[k]);
    for (std::size_t k = 0; k < x_rows_.size(); ++k)
        subtract_multiple(w, w.x(x_cols_[k]), x_rows_[k]);
    for (std::size_t k = 0; k < pz_rows_.size(); ++k)
        subtract_multiple(w, w.y(pz_cols_[k]) / p_.value(), pz_rows_[k]);
}

bool RowReducer::in_span(const MixedWord& w) const {
    MixedWord r = w;
    reduce_in_place(r);
    return r.is_zero();
}

bool RowReducer::insert(MixedWord w) {
    ++inserted_;
    if (in_span(w)) return false;
    // Rebuild from the current basis plus the new row; the span is the
    // same as re-reducing every row ever inserted.
    std::vector<MixedWord> rows = basis_rows();
    rows.push_back(std::move(w));
    rebuild(rows);
    return true;
}

void RowReducer::reduce(std::vector<MixedWord> rows) {
    inserted_ = static_cast<int>(rows.size());
    rebuild(std::move(rows));
}

void RowReducer::rebuild(std::vector<MixedWord> rows) {
    x_rows_.clear();
    pz_rows_.clear();
    unit_rows_.clear();
    x_cols_.clear();
    pz_cols_.clear();
    unit_cols_.clear();

    int p = p_.value();
    const int n_rows = static_cast<int>(rows.size());
    std::vector<bool> is_pivot(n_rows, false);
    std::vector<int> unit_row_idx, x_row_idx, pz_row_idx;

    // Phase 1: unit pivots (rows of order p^2). Each pivot column is
    // cleared from every other row immediately, so later rows never see it.
    for (int r = 0; r < n_rows; ++r) {
        int col = -1;
        for (int j = 0; j < shape_.beta; ++j)
            if (rows[r].y(j) % p != 0) {
                col = j;
                break;
            }
        if (col < 0) continue;
        MixedWord& piv = rows[r];
        piv = scale(inv_mod_p2(p_, piv.y(col)), piv);
        for (int s = 0; s < n_rows; ++s)
            if (s != r) subtract_multiple(rows[s], rows[s].y(col), piv);
        is_pivot[r] = true;
        unit_row_idx.push_back(r);
        unit_cols_.push_back(col);
    }

    // Phase 2: X pivots among the remaining rows, which now have zero at
    // every unit column and Y entirely in pZ (any surviving unit would
    // have become a pivot above). Subtracting c * pivot from an order-p^2
    // row only moves its Y entries by multiples of p.
    for (int r = 0; r < n_rows; ++r) {
        if (is_pivot[r]) continue;
        int col = -1;
        for (int i = 0; i < shape_.alpha; ++i)
            if (rows[r].x(i) != 0) {
                col = i;
                break;
            }
        if (col < 0) continue;
        MixedWord& piv = rows[r];
        piv = scale(inv_mod_p(p_, piv.x(col)), piv);
        for (int s = 0; s < n_rows; ++s)
            if (s != r) subtract_multiple(rows[s], rows[s].x(col), piv);
        is_pivot[r] = true;
        x_row_idx.push_back(r);
        x_cols_.push_back(col);
    }

    // Phase 3: pZ pivots among the leftover rows (X zero, Y in pZ). The
    // pivot entry is normalized to exactly p. Order-p rows are cleared
    // exactly; unit-pivot rows are only reduced mod p, their residue in
    // [0, p) is part of the generated group, not removable.
    for (int r = 0; r < n_rows; ++r) {
        if (is_pivot[r]) continue;
        int col = -1;
        for (int j = 0; j < shape_.beta; ++j)
            if (rows[r].y(j) != 0) {
                col = j;
                break;
            }
        if (col < 0) continue;
        MixedWord& piv = rows[r];
        piv = scale(inv_mod_p(p_, piv.y(col) / p), piv);
        for (int s = 0; s < n_rows; ++s)
            if (s != r) subtract_multiple(rows[s], rows[s].y(col) / p, piv);
        is_pivot[r] = true;
        pz_row_idx.push_back(r);
        pz_cols_.push_back(col);
    }

    for (int r : x_row_idx) x_rows_.push_back(rows[r]);
    for (int r : pz_row_idx) pz_rows_.push_back(rows[r]);
    for (int r : unit_row_idx) unit_rows_.push_back(rows[r]);
}

std::vector<MixedWord> reduce_rows(Prime p, Shape shape, const std::vector<MixedWord>& rows) {
    RowReducer red(p, shape);
    for (const MixedWord& w : rows) {
        if (w.shape() != shape || w.prime() != p)
            throw std::invalid_argument("row shape/prime mismatch");
        red.insert(w);
    }
    return red.basis_rows();
}

}  // namespace zpzp2
