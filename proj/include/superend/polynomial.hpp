#ifndef SUPEREND_POLYNOMIAL_HPP
#define SUPEREND_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superend/errors.hpp"
#include "superend/numeric.hpp"

namespace superend {

// Dense univariate polynomials over an exact field F. The field is a small
// context object supplying the element type and its arithmetic, so the same
// engine serves Q and Q[x]/(f). Coefficients are stored by exponent with
// trailing zeros trimmed; the zero polynomial has an empty vector and
// degree -1.
//
// Field contract:
//   using Elem;
//   Elem zero() / one() / from_long(long) const;
//   Elem add/sub/mul/div(a, b), neg(a), inv(a) const;   (inv may throw)
//   bool is_zero(a), eq(a, b) const;
//   bool compatible(const F&) const;
//   std::string to_string(const Elem&) const;
template <class F>
class Polynomial {
  public:
    using Field = F;
    using Elem = typename F::Elem;

    Polynomial() = default;
    explicit Polynomial(F field) : field_(std::move(field)) {}
    Polynomial(F field, std::vector<Elem> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    // Coefficients given highest degree first, the way polynomials are
    // written (and parsed from the command line).
    static Polynomial from_desc(std::vector<Elem> desc, F field = F{}) {
        std::vector<Elem> c(desc.rbegin(), desc.rend());
        return Polynomial(std::move(field), std::move(c));
    }

    static Polynomial zero(F field = F{}) { return Polynomial(std::move(field)); }
    static Polynomial constant(Elem v, F field = F{}) {
        return Polynomial(std::move(field), {std::move(v)});
    }
    static Polynomial x(F field = F{}) {
        std::vector<Elem> c{field.zero(), field.one()};
        return Polynomial(std::move(field), std::move(c));
    }
    // x - a
    static Polynomial x_minus(const Elem& a, F field = F{}) {
        std::vector<Elem> c{field.neg(a), field.one()};
        return Polynomial(std::move(field), std::move(c));
    }

    const F& field() const { return field_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Elem& operator[](std::size_t i) const { return c_[i]; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    const Elem& lc() const {
        if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<Elem>& coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && field_.eq(c_.back(), field_.one()); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.field_.eq(a.c_[i], b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        Polynomial r(field_);
        r.c_.reserve(c_.size());
        for (const auto& v : c_) r.c_.push_back(field_.neg(v));
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const F& k = a.common_field(b);
        Polynomial r(k);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), k.zero());
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = k.add(a.coeff(i), b.coeff(i));
        r.trim();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        const F& k = a.common_field(b);
        Polynomial r(k);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), k.zero());
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = k.sub(a.coeff(i), b.coeff(i));
        r.trim();
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        const F& k = a.common_field(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(k);
        Polynomial r(k);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, k.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = k.add(r.c_[i + j], k.mul(a.c_[i], b.c_[j]));
        r.trim();
        return r;
    }

    Polynomial scaled(const Elem& s) const {
        Polynomial r(field_);
        r.c_.reserve(c_.size());
        for (const auto& v : c_) r.c_.push_back(field_.mul(v, s));
        r.trim();
        return r;
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    // Euclidean division; the divisor must be nonzero.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        const F& k = a.common_field(b);
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        Polynomial q(k), r = a;
        if (a.degree() < b.degree()) return {q, r};
        q.c_.assign(a.degree() - b.degree() + 1, k.zero());
        const Elem lb_inv = k.inv(b.lc());
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const long shift = r.degree() - b.degree();
            const Elem t = k.mul(r.lc(), lb_inv);
            q.c_[shift] = t;
            // r -= t x^shift b, computed in place
            for (long i = 0; i <= b.degree(); ++i)
                r.c_[i + shift] = k.sub(r.c_[i + shift], k.mul(t, b.c_[i]));
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        return divmod(a, b).first;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        return divmod(a, b).second;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(lc()));
    }

    Polynomial derivative() const {
        Polynomial r(field_);
        if (degree() <= 0) return r;
        r.c_.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_.push_back(field_.mul(c_[i], field_.from_long(static_cast<long>(i))));
        r.trim();
        return r;
    }

    Elem eval(const Elem& x) const {
        Elem s = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) s = field_.add(field_.mul(s, x), c_[i]);
        return s;
    }

    Polynomial pow(unsigned long e) const {
        Polynomial r = constant(field_.one(), field_);
        Polynomial b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // f(x + a), by iterated Horner division: O(deg^2) coefficient ops.
    Polynomial shifted(const Elem& a) const {
        if (degree() <= 0) return *this;
        std::vector<Elem> work = c_;
        std::vector<Elem> out(c_.size(), field_.zero());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            // divide work by (x - (-a)): remainder is the next Taylor coeff
            Elem rem = field_.zero();
            for (std::size_t i = work.size(); i-- > 0;) {
                Elem t = field_.add(field_.mul(rem, a), work[i]);
                work[i] = rem;
                rem = t;
            }
            out[k] = rem;
            work.pop_back();  // quotient now occupies work[0..size-2]
        }
        return Polynomial(field_, std::move(out));
    }

    // x^deg * f(1/x): coefficient reversal. ("mirror through the middle")
    Polynomial reversed() const {
        std::vector<Elem> c(c_.rbegin(), c_.rend());
        return Polynomial(field_, std::move(c));
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (field_.is_zero(c_[i])) continue;
            std::string s = field_.to_string(c_[i]);
            if (!first) os << (s.front() == '-' ? " - " : " + ");
            else if (s.front() == '-') os << "-";
            if (s.front() == '-') s = s.substr(1);
            const bool unit = (s == "1");
            if (i == 0) {
                os << s;
            } else {
                if (!unit) os << s << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }
    const F& common_field(const Polynomial& other) const {
        if (!field_.compatible(other.field_))
            throw DomainError("polynomial operands over different fields");
        return field_;
    }

    F field_;
    std::vector<Elem> c_;
};

// The rational field Q. Stateless; every instance is the same field.
struct Rationals {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_long(long v) const { return Rat(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw DomainError("division by zero in Q");
        return a / b;
    }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DomainError("inverse of zero in Q");
        return Rat(1) / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool compatible(const Rationals&) const { return true; }
    std::string to_string(const Elem& a) const { return a.get_str(); }
};

using UniPoly = Polynomial<Rationals>;

// Convenience builders for integer-coefficient polynomials, highest degree
// first: upoly_desc({1, 0, -2}) is x^2 - 2.
UniPoly upoly_desc(std::initializer_list<long> desc);
UniPoly upoly_desc(const std::vector<Int>& desc);

bool has_integer_coeffs(const UniPoly& f);

// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
template <class F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Extended gcd: returns (g, s, t) with g = s*a + t*b and g monic (or zero).
template <class F>
std::tuple<Polynomial<F>, Polynomial<F>, Polynomial<F>> poly_xgcd(const Polynomial<F>& a,
                                                                  const Polynomial<F>& b) {
    using P = Polynomial<F>;
    const F& k = a.field();
    P r0 = a, r1 = b;
    P s0 = P::constant(k.one(), k), s1 = P::zero(k);
    P t0 = P::zero(k), t1 = P::constant(k.one(), k);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        P s2 = s0 - q * s1;
        P t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto leadinv = k.inv(r0.lc());
    return {r0.scaled(leadinv), s0.scaled(leadinv), t0.scaled(leadinv)};
}

template <class F>
typename F::Elem k_pow(const F& k, typename F::Elem base, long e) {
    auto r = k.one();
    while (e > 0) {
        if (e & 1) r = k.mul(r, base);
        base = k.mul(base, base);
        e >>= 1;
    }
    return r;
}

// Res(f, g) by the Euclidean recurrence
//   Res(f, g) = (-1)^(deg f * deg g) lc(g)^(deg f - deg r) Res(g, r),  r = f mod g.
template <class F>
typename F::Elem resultant(const Polynomial<F>& f, const Polynomial<F>& g) {
    const F& k = f.field();
    if (f.is_zero() || g.is_zero()) {
        // Res with a zero operand: 1 if the other is a nonzero constant, else 0.
        const auto& other = f.is_zero() ? g : f;
        return other.degree() == 0 ? k.one() : k.zero();
    }
    if (g.degree() == 0) return k_pow(k, g.lc(), f.degree());
    if (f.degree() == 0) return k_pow(k, f.lc(), g.degree());
    auto r = f % g;
    if (r.is_zero()) return k.zero();
    auto rec = resultant(g, r);
    auto scale = k_pow(k, g.lc(), f.degree() - r.degree());
    auto v = k.mul(scale, rec);
    if ((f.degree() % 2) && (g.degree() % 2)) v = k.neg(v);
    return v;
}

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f), n = deg f >= 1.
template <class F>
typename F::Elem discriminant(const Polynomial<F>& f) {
    const F& k = f.field();
    const long n = f.degree();
    if (n < 1) throw DomainError("discriminant requires degree >= 1");
    auto res = resultant(f, f.derivative());
    auto d = k.div(res, f.lc());
    if (((n * (n - 1)) / 2) % 2) d = k.neg(d);
    return d;
}

}  // namespace superend

#endif
