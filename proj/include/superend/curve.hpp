#ifndef SUPEREND_CURVE_HPP
#define SUPEREND_CURVE_HPP

#include <cstdint>
#include <vector>

#include "superend/cyclotomic.hpp"
#include "superend/polynomial.hpp"
#include "superend/primality.hpp"

namespace superend {

// Shape of the cover y^q = f(x): the degree n of f together with q = p^r.
// Exactly one of the two admissible divisibility cases holds; shapes with
// p | n but q not dividing n are rejected.
struct CurveShape {
    enum class Case { Coprime, Divisible };

    long long n = 0;
    PrimePower pp;
    Case kind = Case::Coprime;

    static CurveShape make(long long n, const PrimePower& pp);

    bool coprime() const { return kind == Case::Coprime; }
    std::uint64_t q() const { return pp.q; }
    std::uint64_t p() const { return pp.p; }
};

// Integer point strictly inside the triangle (0,0), (0,q), (n,0):
// j, i >= 1 and q*j + n*i < n*q.
struct LatticePoint {
    long long j = 0;
    long long i = 0;
    bool operator==(const LatticePoint&) const = default;
};

// i -> multiplicity of the eigenvalue zeta^(-i) of the cover automorphism
// acting on differentials of the first kind, for i = 1..q-1. The eigenvalue
// 1 (i = 0) never occurs.
struct MultiplicityTable {
    CurveShape shape;
    std::vector<long long> m;  // m[i-1] for i = 1..q-1

    long long at(std::uint64_t i) const;
    long long sum() const;
};

// (q-1)(n-1)/2 when p does not divide n, (q-1)(n-2)/2 when q divides n.
long long genus(const CurveShape& shape);

// Brute-force enumeration, sorted by (i, j); deliberately not using any
// closed counting formula so it can serve as an oracle against genus().
// Coprime case only.
std::vector<LatticePoint> interior_lattice_points(const CurveShape& shape);

// m_i = floor(n*i/q). Coprime case only.
MultiplicityTable multiplicity_table(const CurveShape& shape);

// Sum of m_i over 1 <= i < q with p not dividing i; equals
// (n-1)(p-1)p^(r-1)/2. Coprime case only.
long long primitive_mass(const CurveShape& shape);

// Product of Phi_{p^s} over exactly those s such that some eigenvalue of
// exact order p^s occurs with positive multiplicity. For every coprime
// shape with n >= 2 this comes out to the full all-ones polynomial.
UniPoly spectrum_minimal_polynomial(const CurveShape& shape);

}  // namespace superend

#endif
