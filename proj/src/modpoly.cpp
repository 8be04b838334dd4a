#include "superend/modpoly.hpp"

#include <string>

#include "superend/primality.hpp"

namespace superend {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod_u(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw DomainError("inverse of zero mod p");
    return powmod_u(a, p - 2, p);  // p prime
}

}  // namespace

ModPoly::ModPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (!is_prime_u64(p_)) throw DomainError("ModPoly modulus must be prime");
    for (auto& v : c_) v %= p_;
    trim();
}

ModPoly ModPoly::reduce(const UniPoly& f, u64 p) {
    std::vector<u64> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) {
        if (!is_integer(v)) throw DomainError("ModPoly::reduce needs integer coefficients");
        c.push_back(mod_u64(numerator(v), p));
    }
    return ModPoly(p, std::move(c));
}

std::uint64_t ModPoly::lc() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    if (a.p_ != b.p_) throw DomainError("ModPoly moduli differ");
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
    return ModPoly(a.p_, std::move(c));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    if (a.p_ != b.p_) throw DomainError("ModPoly moduli differ");
    std::vector<u64> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
    return ModPoly(a.p_, std::move(c));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    if (a.p_ != b.p_) throw DomainError("ModPoly moduli differ");
    if (a.is_zero() || b.is_zero()) return ModPoly::zero(a.p_);
    std::vector<u64> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = (c[i + j] + u128(a.c_[i]) * b.c_[j]) % a.p_;
    }
    return ModPoly(a.p_, std::move(c));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
    if (a.p_ != b.p_) throw DomainError("ModPoly moduli differ");
    if (b.is_zero()) throw DomainError("ModPoly division by zero");
    const u64 p = a.p_;
    if (a.degree() < b.degree()) return {ModPoly::zero(p), a};
    std::vector<u64> r = a.c_;
    std::vector<u64> q(a.degree() - b.degree() + 1, 0);
    const u64 inv_lb = invmod(b.lc(), p);
    for (long d = a.degree(); d >= b.degree();) {
        const u64 t = mulmod(r[d], inv_lb, p);
        const long shift = d - b.degree();
        q[shift] = t;
        for (long i = 0; i <= b.degree(); ++i) {
            u64 sub = mulmod(t, b.c_[i], p);
            r[i + shift] = (r[i + shift] + p - sub) % p;
        }
        while (d >= 0 && r[d] == 0) --d;
    }
    r.resize(b.degree() > 0 ? b.degree() : 0);
    return {ModPoly(p, std::move(q)), ModPoly(p, std::move(r))};
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    const u64 s = invmod(lc(), p_);
    std::vector<u64> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = mulmod(c_[i], s, p_);
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::derivative() const {
    if (degree() <= 0) return zero(p_);
    std::vector<u64> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = mulmod(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::powmod(u64 e, const ModPoly& m) const {
    ModPoly r(p_, {1});
    ModPoly b = *this % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

ModPoly modpoly_gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> distinct_degree_factor_degrees(
    const ModPoly& f) {
    if (f.degree() < 1) throw DomainError("distinct_degree_factor_degrees: degree >= 1 required");
    const u64 p = f.modulus();
    {
        ModPoly g = modpoly_gcd(f, f.derivative());
        if (g.degree() != 0)
            throw NotSquarefreeError("polynomial is not squarefree mod " + std::to_string(p));
    }
    ModPoly rem = f.monic();
    ModPoly h = ModPoly::x(p) % rem;  // x^(p^d) mod rem, advanced each round
    std::vector<std::pair<u64, u64>> out;
    u64 d = 0;
    while (rem.degree() > 0 && 2 * (d + 1) <= static_cast<u64>(rem.degree())) {
        ++d;
        h = h.powmod(p, rem);
        ModPoly g = modpoly_gcd(rem, h - ModPoly::x(p));
        if (g.degree() > 0) {
            out.emplace_back(d, static_cast<u64>(g.degree()) / d);
            rem = divmod(rem, g).first;
            h = h % rem;
        }
    }
    if (rem.degree() > 0) out.emplace_back(static_cast<u64>(rem.degree()), 1);
    return out;
}

}  // namespace superend
