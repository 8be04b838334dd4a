#ifndef SUPEREND_MODPOLY_HPP
#define SUPEREND_MODPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "superend/polynomial.hpp"

namespace superend {

// Dense polynomial over F_p for a machine-word prime p. Residues are kept
// reduced in [0, p); trailing zeros trimmed.
class ModPoly {
  public:
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    // Reduction of an integer-coefficient rational polynomial mod p.
    static ModPoly reduce(const UniPoly& f, std::uint64_t p);
    static ModPoly zero(std::uint64_t p) { return ModPoly(p, {}); }
    static ModPoly x(std::uint64_t p) { return ModPoly(p, {0, 1}); }

    std::uint64_t modulus() const { return p_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t lc() const;
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

    ModPoly monic() const;
    ModPoly derivative() const;
    // this^e mod m
    ModPoly powmod(std::uint64_t e, const ModPoly& m) const;

  private:
    void trim();
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

ModPoly modpoly_gcd(ModPoly a, ModPoly b);

// Distinct-degree factorization degrees: (degree, number of monic
// irreducible factors of that degree), ascending. Sum of degree*count is
// deg f. Throws NotSquarefreeError when gcd(f, f') is nonconstant.
std::vector<std::pair<std::uint64_t, std::uint64_t>> distinct_degree_factor_degrees(
    const ModPoly& f);

}  // namespace superend

#endif
