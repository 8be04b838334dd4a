#include "superend/primality.hpp"

#include <string>

namespace superend {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimePower PrimePower::make(u64 p, u64 r) {
    if (!is_prime_u64(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw DomainError("exponent r must be >= 1");
    u64 q = 1;
    for (u64 i = 0; i < r; ++i) {
        if (q > UINT64_MAX / p) throw DomainError("p^r overflows");
        q *= p;
    }
    return PrimePower{p, r, q};
}

PrimePower PrimePower::from_q(u64 q) {
    if (q < 2) throw DomainError("q must be >= 2");
    u64 p = q;
    for (u64 d = 2; d <= q / d; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    u64 r = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
    return make(p, r);
}

std::uint64_t PrimePower::phi() const { return phi_at(r); }

std::uint64_t PrimePower::phi_at(u64 i) const {
    if (i < 1 || i > r) throw DomainError("phi_at: index out of range");
    return (p - 1) * pow_p(i - 1);
}

std::uint64_t PrimePower::pow_p(u64 i) const {
    if (i > r) throw DomainError("pow_p: index out of range");
    u64 v = 1;
    for (u64 k = 0; k < i; ++k) v *= p;
    return v;
}

}  // namespace superend
