#ifndef SUPEREND_DIVISOR_HPP
#define SUPEREND_DIVISOR_HPP

#include <cstdint>
#include <vector>

#include "superend/curve.hpp"
#include "superend/fpmatrix.hpp"
#include "superend/smith.hpp"

namespace superend {

// Degree-zero divisor supported on the branch points over the roots of f.
// Roots are abstract labels 0..n-1; coefficient k is the multiplicity at
// the branch point above root k. The cover automorphism fixes every branch
// point, so it acts trivially on these classes: they model the fixed part
// of the class group.
struct BranchDivisor {
    std::vector<long long> coeff;

    long long degree() const;
};

// Invariants of {degree-zero vectors} / {principal ones}; expected to be a
// free Z/q-module of rank n-1.
struct ClassGroupDescriptor {
    long long n = 0;
    std::uint64_t q = 0;
    std::vector<Int> elementary_divisors;

    Int order() const;
};

// The (n-1)-dimensional F_p-space of sum-zero functions on the roots,
// carrying the coordinate-permutation action of an abstract Galois group.
struct HeartModule {
    long long n = 0;
    std::uint64_t p = 2;
    long long basis_dimension = 0;

    FpMatrix action(const std::vector<std::size_t>& perm) const;
};

// Lemma-of-orders criterion: principal iff q divides every coefficient.
// Coprime case only; the divisor must have degree zero.
bool is_principal(const BranchDivisor& d, const CurveShape& shape);

// Smith-normal-form invariants of the quotient lattice, computed from a
// redundant generating set of the principal sublattice (so the reduction
// does real work rather than reading the answer off the generators).
ClassGroupDescriptor class_group(const CurveShape& shape);

// Membership test in the principal sublattice via the certified SNF
// transform; used to cross-check is_principal by independent coset
// arithmetic.
struct ClassGroupContext {
    CurveShape shape;
    SmithResult snf;  // of the principal sublattice in basis coordinates

    static ClassGroupContext make(const CurveShape& shape);
    bool zero_class(const BranchDivisor& d) const;
};

// Image of multiplication by p^(r-1) on the class group: an F_p-space of
// dimension n-1 presented with the permutation action on sum-zero
// functions. The dimension is computed from an SNF of the image lattice,
// not assumed.
HeartModule fixed_submodule(const CurveShape& shape);

// Matrix of the permutation, acting on the sum-zero subspace in the basis
// e_k - e_{n-1}, k = 0..n-2. Requires p not dividing n.
FpMatrix heart_action(long long n, std::uint64_t p, const std::vector<std::size_t>& perm);

}  // namespace superend

#endif
