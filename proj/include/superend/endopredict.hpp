#ifndef SUPEREND_ENDOPREDICT_HPP
#define SUPEREND_ENDOPREDICT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "superend/curve.hpp"
#include "superend/galois.hpp"

namespace superend {

// One factor Q(zeta_{p^i}) of the predicted endomorphism algebra, with the
// dimension of the jacobian component it acts on.
struct EndoFactor {
    int i = 0;                        // 1..r
    std::uint64_t conductor = 0;      // p^i
    long long degree = 0;             // phi(p^i)
    long long component_dimension = 0;
    long long real_subfield_degree = 0;  // phi(p^i)/2 for conductor > 2, else 1
    bool cm_field = false;               // conductor > 2

    bool operator==(const EndoFactor&) const = default;
};

struct EndoDescriptor {
    CurveShape shape;
    CertLevel hypothesis_level = CertLevel::Inconclusive;
    bool conditional = false;  // emitted without a CertifiedSn/An hypothesis
    bool nq55_caveat = false;  // (n, q) = (5, 5) exclusion flagged, not resolved
    std::vector<EndoFactor> factors;
    long long total_algebra_dimension = 0;  // q - 1
    long long jacobian_dimension = 0;       // genus
    std::optional<long long> reduced_degree;  // n - 1 on the divisible route
};

// Predicted decomposition for the shape, gated on the certificate. Requires
// n >= 5 and an admissible shape; a certificate weaker than CertifiedSn/An
// yields the same numerology flagged conditional. The divisible case is
// routed through the degree-n-1 coprime formulas.
EndoDescriptor predict(const CurveShape& shape, const GaloisCertificate& cert);

// r_X^2 with r_X = 2 dim(X) / [E:Q]; the degree must divide 2 dim(X).
long long centralizer_dim_bound(long long dim_x, long long deg_e);

// (i, (n-1) phi(p^i)/2) for i = 1..r, ascending; the dimensions sum to the
// genus. Coprime case only.
std::vector<std::pair<int, long long>> decomposition_report(const CurveShape& shape);

}  // namespace superend

#endif
