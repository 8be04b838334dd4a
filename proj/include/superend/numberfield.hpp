#ifndef SUPEREND_NUMBERFIELD_HPP
#define SUPEREND_NUMBERFIELD_HPP

#include <memory>
#include <string>

#include "superend/polynomial.hpp"
#include "superend/primality.hpp"

namespace superend {

// Division hit a zero divisor in Q[x]/(f): f was not irreducible after all.
// The discovered nontrivial factor is carried as evidence.
struct NonInvertibleError : Error {
    UniPoly factor;
    explicit NonInvertibleError(UniPoly g)
        : Error("element is not invertible; modulus has factor " + g.to_string()),
          factor(std::move(g)) {}
};

// K1 = Q[x]/(f) for monic nonconstant f, treated as a field. f is not
// verified irreducible up front; if a zero divisor surfaces during
// arithmetic the discovered factor of f is thrown as NonInvertibleError,
// the usual "pretend field" behaviour of computer algebra systems.
//
// Elements are reduced representatives in Q[x]; all arithmetic goes through
// the field object, which carries the shared modulus.
class NumberField {
  public:
    using Elem = UniPoly;

    NumberField() = default;  // placeholder field; unusable until assigned
    explicit NumberField(UniPoly modulus);

    const UniPoly& modulus() const;
    long degree() const { return modulus().degree(); }

    Elem zero() const { return UniPoly::zero(); }
    Elem one() const { return UniPoly::constant(Rat(1)); }
    Elem from_long(long v) const { return UniPoly::constant(Rat(v)); }
    Elem from_rat(const Rat& v) const { return UniPoly::constant(v); }
    Elem generator() const;  // the class of x
    Elem reduce(const UniPoly& a) const { return a % modulus(); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(const Elem& a, unsigned long e) const;

    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool compatible(const NumberField& o) const;

    std::string to_string(const Elem& a) const { return a.to_string(var_); }
    void set_variable(std::string v) { var_ = std::move(v); }

  private:
    std::shared_ptr<const UniPoly> mod_;
    std::string var_ = "a";
};

using NfPoly = Polynomial<NumberField>;

// Outcome of the substitution x1 = 1/(x - alpha), y1 = y/(x - alpha)^m that
// replaces y^q = f(x), q | deg f, by an isomorphic-jacobian model of degree
// n-1 coprime to p. alpha is the class of x in K1 = Q[x]/(f).
struct ReductionResult {
    NumberField field;        // K1
    NfPoly f1;                // f / (x - alpha), degree n-1
    NfPoly h;                 // f1(x + alpha)
    NfPoly h1;                // x^(n-1) h(1/x)
    long long new_degree = 0; // n - 1
    bool h1_separable = false;
    // bookkeeping only: if Gal(f/K) is S_n (resp. A_n) then Gal(h1/K1) is
    // S_{n-1} (resp. A_{n-1}); recorded, not verified.
    std::string galois_note;
};

// Requires q | deg f and f monic separable with rational coefficients.
ReductionResult degree_reduction(const UniPoly& f, const PrimePower& pp);

// (q-1)(n-2)/2 for the divisible shape against (q-1)((n-1)-1)/2 for the
// reduced coprime shape; returns whether they agree.
bool reduced_genus_consistency(long long n, const PrimePower& pp);

}  // namespace superend

#endif
