#pragma once

#include <cstdint>
#include <vector>

#include "zpzp2/ring.hpp"

namespace zpzp2 {

struct Shape {
    int alpha = 0;
    int beta = 0;
    friend bool operator==(const Shape&, const Shape&) = default;
};

// A word (x | y) in Z_p^alpha x Z_{p^2}^beta. X entries live in [0, p),
// Y entries in [0, p^2); constructors normalize.
class MixedWord {
  public:
    MixedWord(Prime p, Shape shape);  // zero word
    MixedWord(Prime p, std::vector<int> x, std::vector<int> y);

    Prime prime() const { return p_; }
    Shape shape() const { return {static_cast<int>(x_.size()), static_cast<int>(y_.size())}; }
    int alpha() const { return static_cast<int>(x_.size()); }
    int beta() const { return static_cast<int>(y_.size()); }

    std::uint8_t x(int i) const { return x_[i]; }
    std::uint16_t y(int j) const { return y_[j]; }
    void set_x(int i, int v);
    void set_y(int j, int v);
    const std::vector<std::uint8_t>& x_data() const { return x_; }
    const std::vector<std::uint16_t>& y_data() const { return y_; }
    std::uint8_t* x_raw() { return x_.data(); }
    std::uint16_t* y_raw() { return y_.data(); }

    bool is_zero() const;
    friend bool operator==(const MixedWord& a, const MixedWord& b) {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

  private:
    Prime p_;
    std::vector<std::uint8_t> x_;
    std::vector<std::uint16_t> y_;
};

MixedWord add(const MixedWord& a, const MixedWord& b);
MixedWord sub(const MixedWord& a, const MixedWord& b);
MixedWord scale(int k, const MixedWord& w);

// Component-wise product (X entries mod p, Y entries mod p^2).
MixedWord star(const MixedWord& a, const MixedWord& b);

// Additive order of w: 1, p or p^2.
int word_order(const MixedWord& w);

// p*<x_a, x_b> + <y_a, y_b> mod p^2 (the X dot product taken mod p first).
int inner_product(const MixedWord& a, const MixedWord& b);

}  // namespace zpzp2
