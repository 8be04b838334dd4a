#ifndef SUPEREND_GALOIS_HPP
#define SUPEREND_GALOIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superend/modpoly.hpp"
#include "superend/polynomial.hpp"

namespace superend {

// Partition of n recording the degrees of the irreducible factors of f mod
// p; by Dedekind, the cycle type of a Frobenius element of Gal(f).
struct CycleType {
    std::vector<int> parts;  // descending

    int sum() const;
    bool operator==(const CycleType&) const = default;
    bool operator<(const CycleType& o) const { return parts < o.parts; }
    std::string to_string() const;
};

enum class CertLevel {
    CertifiedSn,
    CertifiedAn,
    SubsetAnOnly,
    IrreducibleOnly,
    Inconclusive,
    Reducible,
};

std::string to_string(CertLevel level);

struct GaloisCertificate {
    UniPoly poly;
    int n = 0;
    CertLevel level = CertLevel::Inconclusive;
    Rat disc;
    bool disc_is_square = false;
    std::map<std::uint64_t, CycleType> witness_primes;
    std::optional<std::uint64_t> irreducibility_witness;
    std::optional<Rat> rational_root;  // set when level == Reducible
    bool transitivity_certified = false;
};

struct IrreducibilityEvidence {
    enum class Kind { IrreducibleCertified, ReducibleWitness, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<std::uint64_t> certifying_prime;
    std::optional<Rat> rational_root;
    std::vector<int> factor_degrees;  // for ReducibleWitness
};

// Factor-degree partition of f mod p. Requires p dividing neither lc(f) nor
// the discriminant numerator; otherwise BadPrimeError.
CycleType reduce_and_cycle_type(const UniPoly& f, std::uint64_t p);

// Samples primes 2, 3, 5, ... (skipping bad ones) until `prime_budget`
// usable primes were examined. IrreducibleCertified when some reduction
// stays irreducible; ReducibleWitness only when an explicit rational root
// confirms a linear factor; Unknown otherwise.
IrreducibilityEvidence irreducibility_evidence(const UniPoly& f, int prime_budget);

// Exact square test on the (nonzero) discriminant.
bool discriminant_square_test(const UniPoly& f);

// One-sided certification from Frobenius data plus classical group theory:
//  - CertifiedSn: transitivity, a transposition type (2,1,...,1), a single
//    prime cycle of length > n/2 with fixed points elsewhere, nonsquare
//    discriminant.
//  - CertifiedAn: transitivity, square discriminant, and observed types not
//    all contained in the type set of any proper transitive subgroup of A_n
//    (lookup tables for n <= 7).
// Weaker evidence degrades to SubsetAnOnly / IrreducibleOnly / Inconclusive.
GaloisCertificate certify(const UniPoly& f, int prime_budget);

// Observed types rule out every rational factor degree 0 < k < n: a factor
// of degree k forces a sub-multiset summing to k in every unramified
// factorization pattern.
bool types_force_irreducibility(const std::vector<CycleType>& types, int n);

}  // namespace superend

#endif
