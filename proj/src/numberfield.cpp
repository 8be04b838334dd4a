#include "superend/numberfield.hpp"

#include "superend/curve.hpp"

namespace superend {

NumberField::NumberField(UniPoly modulus) {
    if (modulus.degree() < 1) throw DomainError("number field modulus must be nonconstant");
    if (!modulus.is_monic()) throw DomainError("number field modulus must be monic");
    mod_ = std::make_shared<const UniPoly>(std::move(modulus));
}

const UniPoly& NumberField::modulus() const {
    if (!mod_) throw DomainError("uninitialized number field");
    return *mod_;
}

NumberField::Elem NumberField::generator() const {
    return reduce(UniPoly::x());
}

NumberField::Elem NumberField::inv(const Elem& a) const {
    if (a.is_zero()) throw DomainError("inverse of zero in number field");
    auto [g, s, t] = poly_xgcd(a, modulus());
    if (g.degree() != 0) throw NonInvertibleError(g);
    // g = 1 after normalization, so s is the inverse of a mod f
    return reduce(s);
}

NumberField::Elem NumberField::pow(const Elem& a, unsigned long e) const {
    Elem r = one();
    Elem b = reduce(a);
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

bool NumberField::compatible(const NumberField& o) const {
    if (!mod_ || !o.mod_) return false;
    return mod_ == o.mod_ || *mod_ == *o.mod_;
}

ReductionResult degree_reduction(const UniPoly& f, const PrimePower& pp) {
    const long long n = f.degree();
    if (n < 2) throw DomainError("degree reduction requires deg f >= 2");
    if (static_cast<std::uint64_t>(n) % pp.q != 0)
        throw DomainError("degree reduction requires q | deg f");
    if (!f.is_monic()) throw DomainError("degree reduction requires monic f");
    if (discriminant(f) == 0) throw DomainError("degree reduction requires separable f");

    NumberField k1(f);
    const auto alpha = k1.generator();

    // f1 = f / (x - alpha) by synthetic division in K1[x]; the zero
    // remainder is f(alpha) = 0 and any other value is an invariant breach.
    std::vector<NumberField::Elem> b(static_cast<std::size_t>(n));
    NumberField::Elem carry = k1.zero();
    for (long long i = n; i-- > 0;) {
        carry = k1.add(k1.mul(carry, alpha), k1.from_rat(f.coeff(static_cast<std::size_t>(i + 1))));
        b[static_cast<std::size_t>(i)] = carry;
    }
    NumberField::Elem rem =
        k1.add(k1.mul(carry, alpha), k1.from_rat(f.coeff(0)));
    if (!k1.is_zero(rem)) throw Error("synthetic division left nonzero remainder f(alpha)");

    NfPoly f1(k1, std::move(b));
    NfPoly h = f1.shifted(alpha);
    NfPoly h1 = h.reversed();

    ReductionResult res;
    res.field = k1;
    res.f1 = std::move(f1);
    res.h = std::move(h);
    res.h1 = std::move(h1);
    res.new_degree = n - 1;
    if (res.h1.degree() != n - 1)
        throw Error("reduced polynomial has wrong degree (f not separable over K1?)");
    res.h1_separable = poly_gcd(res.h1, res.h1.derivative()).degree() == 0;
    res.galois_note =
        "if Gal(f/K) = S_n (resp. A_n) then Gal(h1/K1) = S_{n-1} (resp. A_{n-1})";
    return res;
}

bool reduced_genus_consistency(long long n, const PrimePower& pp) {
    if (static_cast<std::uint64_t>(n) % pp.q != 0)
        throw DomainError("consistency check requires q | n");
    const long long direct = genus(CurveShape::make(n, pp));
    // n = q = 2 reduces to a rational curve; the shape type starts at n = 2
    const long long reduced = n - 1 >= 2 ? genus(CurveShape::make(n - 1, pp)) : 0;
    return direct == reduced;
}

}  // namespace superend
