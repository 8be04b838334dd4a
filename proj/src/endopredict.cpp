#include "superend/endopredict.hpp"

namespace superend {

std::vector<std::pair<int, long long>> decomposition_report(const CurveShape& shape) {
    if (!shape.coprime())
        throw DomainError("decomposition requires p not dividing n; reduce the degree first");
    std::vector<std::pair<int, long long>> out;
    out.reserve(shape.pp.r);
    for (std::uint64_t i = 1; i <= shape.pp.r; ++i) {
        const long long phi = static_cast<long long>(shape.pp.phi_at(i));
        out.emplace_back(static_cast<int>(i), (shape.n - 1) * phi / 2);
    }
    return out;
}

EndoDescriptor predict(const CurveShape& shape, const GaloisCertificate& cert) {
    if (shape.n < 5) throw DomainError("prediction requires n >= 5");

    EndoDescriptor d;
    d.shape = shape;
    d.hypothesis_level = cert.level;
    d.conditional =
        !(cert.level == CertLevel::CertifiedSn || cert.level == CertLevel::CertifiedAn);
    d.nq55_caveat = (shape.n == 5 && shape.q() == 5);
    d.total_algebra_dimension = static_cast<long long>(shape.q()) - 1;
    d.jacobian_dimension = genus(shape);

    // effective degree for the per-factor dimensions; the divisible case is
    // isomorphic (as a jacobian) to a coprime model of degree n-1
    long long n_eff = shape.n;
    if (!shape.coprime()) {
        n_eff = shape.n - 1;
        d.reduced_degree = n_eff;
    }

    long long dim_sum = 0;
    for (std::uint64_t i = 1; i <= shape.pp.r; ++i) {
        EndoFactor f;
        f.i = static_cast<int>(i);
        f.conductor = shape.pp.pow_p(i);
        f.degree = static_cast<long long>(shape.pp.phi_at(i));
        f.component_dimension = (n_eff - 1) * f.degree / 2;
        f.cm_field = f.conductor > 2;
        f.real_subfield_degree = f.cm_field ? f.degree / 2 : 1;
        dim_sum += f.component_dimension;
        d.factors.push_back(f);
    }
    if (dim_sum != d.jacobian_dimension)
        throw Error("component dimensions do not sum to the genus (internal inconsistency)");
    return d;
}

long long centralizer_dim_bound(long long dim_x, long long deg_e) {
    if (dim_x < 1 || deg_e < 1) throw DomainError("dimensions must be positive");
    if ((2 * dim_x) % deg_e != 0)
        throw DomainError("field degree must divide twice the abelian variety dimension");
    const long long r = 2 * dim_x / deg_e;
    return r * r;
}

}  // namespace superend
