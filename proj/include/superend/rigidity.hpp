#ifndef SUPEREND_RIGIDITY_HPP
#define SUPEREND_RIGIDITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "superend/curve.hpp"

namespace superend {

// Outcome of the exhaustive multiplier search over the units mod q.
// rigid == true means no multiplier 1 < m < q coprime to p maps the
// multiplicity tuple to itself. When a preserving multiplier exists it is
// recorded in counterexample (and the tuple condition holds for every index
// coprime to p, so no failing index accompanies it). For rigid verdicts,
// failing_index exhibits why the smallest candidate multiplier was rejected.
struct RigidityVerdict {
    CurveShape shape;
    bool rigid = false;
    std::optional<std::uint64_t> counterexample;
    std::optional<std::uint64_t> failing_index;
    std::vector<std::uint64_t> set_a;
};

// { i : 1 <= i <= floor((q-1)/n), p does not divide i }; exactly the indices
// coprime to p whose multiplicity vanishes. Coprime case only.
std::vector<std::uint64_t> set_A(const CurveShape& shape);

// True iff m_i = m_(i*m mod q) for every 1 <= i < q with p not dividing i.
// Requires 1 <= m < q and gcd(m, p) = 1.
bool multiplier_preserves_tuple(const CurveShape& shape, std::uint64_t m);
bool multiplier_preserves_tuple(const MultiplicityTable& table, std::uint64_t m);

// Smallest index coprime to p at which m fails, if any.
std::optional<std::uint64_t> first_failing_index(const MultiplicityTable& table, std::uint64_t m);

// Exhaustive over all units 1 < m < q. Requires the coprime case and n >= 4
// (hard errors, so sweeps cannot report vacuous success).
RigidityVerdict rigidity_check(const CurveShape& shape);

}  // namespace superend

#endif
