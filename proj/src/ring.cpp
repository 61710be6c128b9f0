#include "zpzp2/ring.hpp"

#include <string>

namespace zpzp2 {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Prime::Prime(int p) : p_(p) {
    if (p < 3 || p > 97 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("p must be an odd prime in [3, 97], got " +
                                    std::to_string(p));
}

Digits digits(Prime p, int theta) {
    int m = p.squared();
    if (theta < 0 || theta >= m)
        throw std::invalid_argument("value " + std::to_string(theta) +
                                    " out of range [0, " + std::to_string(m) + ")");
    return {theta % p.value(), theta / p.value()};
}

int inv_mod_p(Prime p, int a) {
    a %= p.value();
    if (a < 0) a += p.value();
    if (a == 0) throw std::invalid_argument("0 has no inverse mod p");
    // Fermat: a^(p-2) mod p.
    long long r = 1, b = a;
    for (int e = p.value() - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p.value();
        b = b * b % p.value();
    }
    return static_cast<int>(r);
}

int inv_mod_p2(Prime p, int u) {
    int m = p.squared();
    u %= m;
    if (u < 0) u += m;
    if (u % p.value() == 0)
        throw std::invalid_argument(std::to_string(u) + " is not a unit mod p^2");
    // Extended Euclid on (u, p^2).
    long long r0 = u, r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r = r0 - q * r1;
        r0 = r1; r1 = r;
        long long s = s0 - q * s1;
        s0 = s1; s1 = s;
    }
    long long inv = s0 % m;
    if (inv < 0) inv += m;
    return static_cast<int>(inv);
}

unsigned __int128 pow_u128(int base, int exp) {
    // Saturates instead of wrapping; callers only compare against caps far
    // below the saturation point.
    constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
    unsigned __int128 r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > kMax / static_cast<unsigned>(base)) return kMax;
        r *= static_cast<unsigned>(base);
    }
    return r;
}

}  // namespace zpzp2
