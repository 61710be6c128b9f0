#include "zpzp2/word.hpp"

#include <string>

#include "zpzp2/kernels.hpp"

namespace zpzp2 {

MixedWord::MixedWord(Prime p, Shape shape) : p_(p) {
    if (shape.alpha < 0 || shape.beta < 0 || shape.alpha + shape.beta <= 0)
        throw std::invalid_argument("word shape must have alpha + beta > 0");
    x_.assign(shape.alpha, 0);
    y_.assign(shape.beta, 0);
}

MixedWord::MixedWord(Prime p, std::vector<int> x, std::vector<int> y) : p_(p) {
    if (x.empty() && y.empty())
        throw std::invalid_argument("word shape must have alpha + beta > 0");
    x_.reserve(x.size());
    y_.reserve(y.size());
    for (int v : x) {
        int r = v % p.value();
        if (r < 0) r += p.value();
        x_.push_back(static_cast<std::uint8_t>(r));
    }
    for (int v : y) {
        int r = v % p.squared();
        if (r < 0) r += p.squared();
        y_.push_back(static_cast<std::uint16_t>(r));
    }
}

void MixedWord::set_x(int i, int v) {
    int r = v % p_.value();
    if (r < 0) r += p_.value();
    x_[i] = static_cast<std::uint8_t>(r);
}

void MixedWord::set_y(int j, int v) {
    int r = v % p_.squared();
    if (r < 0) r += p_.squared();
    y_[j] = static_cast<std::uint16_t>(r);
}

bool MixedWord::is_zero() const {
    for (auto v : x_)
        if (v) return false;
    for (auto v : y_)
        if (v) return false;
    return true;
}

namespace {

void require_same_shape(const MixedWord& a, const MixedWord& b) {
    if (a.shape() != b.shape() || a.prime() != b.prime())
        throw std::invalid_argument("word shape/prime mismatch");
}

}  // namespace

MixedWord add(const MixedWord& a, const MixedWord& b) {
    require_same_shape(a, b);
    MixedWord out(a.prime(), a.shape());
    const auto& k = kernels::active();
    k.add_mod_u8(a.x_data().data(), b.x_data().data(), out.x_raw(), a.x_data().size(),
                 static_cast<std::uint8_t>(a.prime().value()));
    k.add_mod_u16(a.y_data().data(), b.y_data().data(), out.y_raw(), a.y_data().size(),
                  static_cast<std::uint16_t>(a.prime().squared()));
    return out;
}

MixedWord sub(const MixedWord& a, const MixedWord& b) {
    return add(a, scale(-1, b));
}

MixedWord scale(int k, const MixedWord& w) {
    int p = w.prime().value(), p2 = w.prime().squared();
    int kp = ((k % p) + p) % p;
    int kp2 = ((k % p2) + p2) % p2;
    MixedWord out(w.prime(), w.shape());
    for (int i = 0; i < w.alpha(); ++i) out.set_x(i, kp * w.x(i));
    for (int j = 0; j < w.beta(); ++j) out.set_y(j, kp2 * w.y(j));
    return out;
}

MixedWord star(const MixedWord& a, const MixedWord& b) {
    require_same_shape(a, b);
    MixedWord out(a.prime(), a.shape());
    for (int i = 0; i < a.alpha(); ++i) out.set_x(i, a.x(i) * b.x(i));
    for (int j = 0; j < a.beta(); ++j) out.set_y(j, a.y(j) * b.y(j));
    return out;
}

int word_order(const MixedWord& w) {
    int p = w.prime().value();
    bool unit = false;
    for (int j = 0; j < w.beta(); ++j)
        if (w.y(j) % p != 0) unit = true;
    if (unit) return w.prime().squared();
    return w.is_zero() ? 1 : p;
}

int inner_product(const MixedWord& a, const MixedWord& b) {
    require_same_shape(a, b);
    int p = a.prime().value(), p2 = a.prime().squared();
    long long sx = 0, sy = 0;
    for (int i = 0; i < a.alpha(); ++i) sx += a.x(i) * b.x(i);
    for (int j = 0; j < a.beta(); ++j) sy = (sy + a.y(j) * b.y(j)) % p2;
    return static_cast<int>((p * (sx % p) + sy) % p2);
}

}  // namespace zpzp2
