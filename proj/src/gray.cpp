#include "zpzp2/gray.hpp"

#include <string>

#include "zpzp2/kernels.hpp"

namespace zpzp2 {

GrayWord phi(Prime p, int theta) {
    Digits d = digits(p, theta);
    GrayWord g(p.value());
    int v = d.hi;
    for (int i = 0; i < p.value(); ++i) {
        g[i] = static_cast<std::uint8_t>(v);
        v += d.lo;
        if (v >= p.value()) v -= p.value();
    }
    return g;
}

int phi_inverse(Prime p, std::span<const std::uint8_t> g) {
    if (static_cast<int>(g.size()) != p.value())
        throw std::invalid_argument("phi image must have length p");
    int hi = g[0];
    int lo = (g[1] - g[0] + p.value()) % p.value();
    int v = hi;
    for (int i = 0; i < p.value(); ++i) {
        if (g[i] != v)
            throw std::invalid_argument("vector is not an arithmetic progression mod p");
        v += lo;
        if (v >= p.value()) v -= p.value();
    }
    return hi * p.value() + lo;
}

GrayWord big_phi(const MixedWord& w) {
    Prime p = w.prime();
    GrayWord g;
    g.reserve(w.alpha() + p.value() * w.beta());
    for (int i = 0; i < w.alpha(); ++i) g.push_back(w.x(i));
    for (int j = 0; j < w.beta(); ++j) {
        GrayWord block = phi(p, w.y(j));
        g.insert(g.end(), block.begin(), block.end());
    }
    return g;
}

MixedWord big_phi_inverse(Prime p, std::span<const std::uint8_t> g, Shape shape) {
    if (static_cast<int>(g.size()) != shape.alpha + p.value() * shape.beta)
        throw std::invalid_argument("Gray vector length does not match shape");
    MixedWord w(p, shape);
    for (int i = 0; i < shape.alpha; ++i) {
        if (g[i] >= p.value()) throw std::invalid_argument("X entry out of range");
        w.set_x(i, g[i]);
    }
    for (int j = 0; j < shape.beta; ++j)
        w.set_y(j, phi_inverse(p, g.subspan(shape.alpha + j * p.value(), p.value())));
    return w;
}

int hom_weight(Prime p, int theta) {
    Digits d = digits(p, theta);
    if (theta == 0) return 0;
    return d.lo == 0 ? p.value() : p.value() - 1;
}

long long hom_distance(Prime p, std::span<const std::uint16_t> a,
                       std::span<const std::uint16_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    int p2 = p.squared();
    long long d = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        d += hom_weight(p, (a[j] + p2 - b[j]) % p2);
    return d;
}

long long hamming_weight(std::span<const std::uint8_t> g) {
    return static_cast<long long>(kernels::active().count_nonzero_u8(g.data(), g.size()));
}

long long hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    long long d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

MixedWord carry_word(const MixedWord& u, const MixedWord& v) {
    if (u.shape() != v.shape() || u.prime() != v.prime())
        throw std::invalid_argument("word shape/prime mismatch");
    Prime p = u.prime();
    MixedWord out(p, u.shape());
    for (int j = 0; j < u.beta(); ++j) {
        int lo = digits(p, u.y(j)).lo + digits(p, v.y(j)).lo;
        if (lo >= p.value()) out.set_y(j, 1);
    }
    return out;
}

MixedWord carry_correction(const MixedWord& u, const MixedWord& v) {
    Prime p = u.prime();
    MixedWord out = carry_word(u, v);
    int corr = p.value() * (p.value() - 1);
    for (int j = 0; j < u.beta(); ++j)
        if (out.y(j)) out.set_y(j, corr);
    return out;
}

}  // namespace zpzp2
