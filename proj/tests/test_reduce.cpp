#include <doctest.h>

#include <random>
#include <vector>

#include "zpzp2/code.hpp"

using namespace zpzp2;

namespace {

MixedWord random_word(std::mt19937& rng, Prime p, Shape shape) {
    MixedWord w(p, shape);
    for (int i = 0; i < shape.alpha; ++i) w.set_x(i, (int)(rng() % p.value()));
    for (int j = 0; j < shape.beta; ++j) w.set_y(j, (int)(rng() % (p.value() * p.value())));
    return w;
}

}  // namespace

TEST_CASE("a generating set may show more unit rows than delta") {
    // (|1,0) and (|1,3) are both order p^2, yet the group they generate has
    // gamma = 1, delta = 1: their difference (|0,3) has order p.
    Prime p(3);
    Shape shape{0, 2};
    RowReducer red(p, shape);
    red.reduce({MixedWord(p, {}, {1, 0}), MixedWord(p, {}, {1, 3})});
    CHECK(red.gamma() == 1);
    CHECK(red.delta() == 1);
    CHECK(red.kappa() == 0);
    CHECK(red.in_span(MixedWord(p, {}, {1, 0})));
    CHECK(red.in_span(MixedWord(p, {}, {1, 3})));
    CHECK(red.in_span(MixedWord(p, {}, {0, 3})));
    CHECK(!red.in_span(MixedWord(p, {}, {0, 1})));
}

TEST_CASE("pivots are assigned row-major with the lowest column") {
    Prime p(3);
    Shape shape{0, 3};
    RowReducer red(p, shape);
    red.reduce({MixedWord(p, {}, {0, 1, 1}), MixedWord(p, {}, {1, 1, 0})});
    CHECK(red.delta() == 2);
    REQUIRE(red.unit_pivot_cols().size() == 2);
    CHECK(red.unit_pivot_cols()[0] == 1);  // first row's lowest unit column
    CHECK(red.unit_pivot_cols()[1] == 0);
}

TEST_CASE("basis rows carry normalized pivots and cleared columns") {
    std::mt19937 rng(41);
    for (int pv : {3, 5}) {
        Prime p(pv);
        Shape shape{2, 3};
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<MixedWord> rows;
            int n = 1 + (int)(rng() % 5);
            for (int i = 0; i < n; ++i) rows.push_back(random_word(rng, p, shape));
            RowReducer red(p, shape);
            red.reduce(rows);

            std::vector<MixedWord> basis = red.basis_rows();
            const auto& xc = red.x_pivot_cols();
            const auto& zc = red.pz_pivot_cols();
            const auto& uc = red.unit_pivot_cols();
            // basis order: X rows, pZ rows, unit rows
            std::size_t k = xc.size(), g = zc.size(), d = uc.size();
            REQUIRE(basis.size() == k + g + d);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const MixedWord& w = basis[i];
                for (std::size_t j = 0; j < k; ++j)
                    CHECK(w.x((int)xc[j]) == (i == j ? 1 : 0));
                for (std::size_t j = 0; j < g; ++j) {
                    if (i < k + g) {
                        CHECK(w.y((int)zc[j]) == (i == k + j ? pv : 0));
                    } else {
                        // unit rows are only reduced mod p at pZ pivots
                        CHECK(w.y((int)zc[j]) < pv);
                    }
                }
                for (std::size_t j = 0; j < d; ++j)
                    CHECK(w.y((int)uc[j]) == (i == k + g + j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("reduction preserves the generated group") {
    std::mt19937 rng(43);
    for (int pv : {3, 5}) {
        Prime p(pv);
        Shape shape{2, 2};
        for (int trial = 0; trial < 80; ++trial) {
            std::vector<MixedWord> rows;
            int n = (int)(rng() % 5);
            for (int i = 0; i < n; ++i) rows.push_back(random_word(rng, p, shape));

            RowReducer batch(p, shape);
            batch.reduce(rows);

            // every input row is spanned by the basis
            for (const MixedWord& r : rows) CHECK(batch.in_span(r));

            // mutual inclusion against an insert-built reducer
            RowReducer incremental(p, shape);
            for (const MixedWord& r : rows) incremental.insert(r);
            CHECK(incremental.inserted_count() == n);
            CHECK(incremental.gamma() == batch.gamma());
            CHECK(incremental.delta() == batch.delta());
            CHECK(incremental.kappa() == batch.kappa());
            for (const MixedWord& b : batch.basis_rows()) CHECK(incremental.in_span(b));
            for (const MixedWord& b : incremental.basis_rows()) CHECK(batch.in_span(b));

            // reducing the basis again changes nothing
            RowReducer again(p, shape);
            again.reduce(batch.basis_rows());
            CHECK(again.basis_rows() == batch.basis_rows());
        }
    }
}

TEST_CASE("insert rejects dependent rows") {
    Prime p(3);
    Shape shape{1, 1};
    RowReducer red(p, shape);
    CHECK(red.insert(MixedWord(p, {0}, {1})));
    CHECK(!red.insert(MixedWord(p, {0}, {2})));
    CHECK(!red.insert(MixedWord(p, {0}, {3})));
    CHECK(!red.insert(MixedWord(p, Shape{1, 1})));
    CHECK(red.insert(MixedWord(p, {1}, {0})));
    CHECK(red.pivot_count() == 2);
    CHECK(red.inserted_count() == 5);
    // span is now everything
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 9; ++y) CHECK(red.in_span(MixedWord(p, {x}, {y})));
}

TEST_CASE("reduce_rows drops zero and dependent rows") {
    Prime p(3);
    Shape shape{0, 2};
    std::vector<MixedWord> rows = {
        MixedWord(p, Shape{0, 2}),      // zero
        MixedWord(p, {}, {1, 2}),
        MixedWord(p, {}, {2, 4}),       // 2x the previous
        MixedWord(p, {}, {3, 6}),       // 3x the first
        MixedWord(p, {}, {0, 3}),
    };
    std::vector<MixedWord> basis = reduce_rows(p, shape, rows);
    RowReducer red(p, shape);
    red.reduce(rows);
    CHECK(basis == red.basis_rows());
    CHECK(red.gamma() == 1);
    CHECK(red.delta() == 1);
}
