#pragma once

#include <cstdint>
#include <stdexcept>

namespace zpzp2 {

// Thrown when an operation would have to enumerate more codewords (or
// ambient words) than the configured cap allows.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed external input (code files, word literals).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 14348907;  // 3^15

// An odd prime in [3, 97]. All alphabet arithmetic is mod p (first block)
// and mod p^2 (second block), so p^2-1 must fit comfortably in a byte pair;
// the 97 bound keeps every X entry in uint8_t and every Y entry in uint16_t.
class Prime {
  public:
    explicit Prime(int p);
    int value() const { return p_; }
    int squared() const { return p_ * p_; }
    friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }
    friend bool operator!=(Prime a, Prime b) { return a.p_ != b.p_; }

  private:
    int p_;
};

// theta = hi * p + lo with 0 <= lo, hi < p.
struct Digits {
    int lo;
    int hi;
};

Digits digits(Prime p, int theta);

// Multiplicative inverse of a mod p; throws std::invalid_argument when
// a == 0 (mod p).
int inv_mod_p(Prime p, int a);

// Multiplicative inverse of a unit u mod p^2 (u not divisible by p).
int inv_mod_p2(Prime p, int u);

// p^e as a 128-bit value; exponents stay small (e <= ~40 in practice).
unsigned __int128 pow_u128(int base, int exp);

}  // namespace zpzp2
