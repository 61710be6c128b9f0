#include <algorithm>
#include <string>

#include "zpzp2/code.hpp"

namespace zpzp2 {

// Walks the whole ambient group Z_p^alpha x Z_{p^2}^beta with an odometer
// over coordinate digits, maintaining for every generator g the running
// X dot product mod p and Y dot product mod p^2. A word annihilates C
// exactly when p*sx + sy is 0 mod p^2 against every generator row, which
// suffices because the product is additive in each argument.
AdditiveCode dual(const AdditiveCode& c, std::uint64_t cap) {
    Prime p = c.prime();
    Shape shape = c.shape();
    int pv = p.value(), p2 = p.squared();
    int ambient_exp = shape.alpha + 2 * shape.beta;
    if (pow_u128(pv, ambient_exp) > cap)
        throw CapExceeded("ambient group has " + std::to_string(pv) + "^" +
                          std::to_string(ambient_exp) +
                          " words, above the enumeration cap " + std::to_string(cap));

    std::vector<MixedWord> gens = c.generators().all_rows();
    const int ng = static_cast<int>(gens.size());
    const int m = shape.alpha + shape.beta;

    RowReducer annihilator(p, shape);
    if (ng == 0) {
        // Zero code: every ambient word annihilates; the dual is the whole
        // group, generated by the unit vectors.
        std::vector<MixedWord> rows;
        for (int i = 0; i < shape.alpha; ++i) {
            MixedWord w(p, shape);
            w.set_x(i, 1);
            rows.push_back(w);
        }
        for (int j = 0; j < shape.beta; ++j) {
            MixedWord w(p, shape);
            w.set_y(j, 1);
            rows.push_back(w);
        }
        return AdditiveCode(GeneratorMatrix(p, shape, rows));
    }

    // prefix_sx/sy[(i+1)*ng + g] hold the dot products of the first i
    // digits against generator g; a digit increment updates one level.
    std::vector<int> radix(m), d(m, 0);
    for (int i = 0; i < m; ++i) radix[i] = i < shape.alpha ? pv : p2;
    std::vector<int> sx((m + 1) * ng, 0), sy((m + 1) * ng, 0);

    auto emit = [&]() {
        const int* ex = &sx[m * ng];
        const int* ey = &sy[m * ng];
        for (int g = 0; g < ng; ++g)
            if ((pv * ex[g] + ey[g]) % p2 != 0) return;
        std::vector<int> xs(d.begin(), d.begin() + shape.alpha);
        std::vector<int> ys(d.begin() + shape.alpha, d.end());
        annihilator.insert(MixedWord(p, xs, ys));
    };

    while (true) {
        emit();
        int j = m - 1;
        while (j >= 0 && d[j] == radix[j] - 1) {
            d[j] = 0;
            --j;
        }
        if (j < 0) break;
        ++d[j];
        int* lx = &sx[(j + 1) * ng];
        int* ly = &sy[(j + 1) * ng];
        if (j < shape.alpha) {
            for (int g = 0; g < ng; ++g) {
                lx[g] += gens[g].x(j);
                if (lx[g] >= pv) lx[g] -= pv;
            }
        } else {
            int yj = j - shape.alpha;
            for (int g = 0; g < ng; ++g) {
                ly[g] += gens[g].y(yj);
                if (ly[g] >= p2) ly[g] -= p2;
            }
        }
        for (int i = j + 1; i < m; ++i) {
            std::copy(&sx[i * ng], &sx[i * ng] + ng, &sx[(i + 1) * ng]);
            std::copy(&sy[i * ng], &sy[i * ng] + ng, &sy[(i + 1) * ng]);
        }
    }

    std::vector<MixedWord> basis = annihilator.basis_rows();
    if (basis.empty()) {
        // Dual of the full group: the zero code, representable with an
        // empty generator matrix.
        return AdditiveCode(GeneratorMatrix(p, shape, {}));
    }
    return AdditiveCode(GeneratorMatrix(p, shape, basis));
}

}  // namespace zpzp2
