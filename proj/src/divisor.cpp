#include "superend/divisor.hpp"

#include <string>

namespace superend {

long long BranchDivisor::degree() const {
    long long s = 0;
    for (long long v : coeff) s += v;
    return s;
}

Int ClassGroupDescriptor::order() const {
    Int o(1);
    for (const Int& d : elementary_divisors) o *= d;
    return o;
}

bool is_principal(const BranchDivisor& d, const CurveShape& shape) {
    if (!shape.coprime())
        throw DomainError("principality criterion assumes p does not divide n");
    if (static_cast<long long>(d.coeff.size()) != shape.n)
        throw DomainError("divisor has wrong support size");
    if (d.degree() != 0) throw DomainError("divisor must have degree zero");
    const auto q = static_cast<long long>(shape.q());
    for (long long v : d.coeff)
        if (v % q != 0) return false;
    return true;
}

namespace {

// Basis of the degree-zero lattice: rows b_k = e_k - e_{n-1}, k = 0..n-2.
// A degree-zero vector (a_0..a_{n-1}) has coordinates (a_0..a_{n-2}).
//
// Principal sublattice generated redundantly by q(e_i - e_j) for i < j; in
// basis coordinates q(e_i - e_j) = q(b_i - b_j) with b_{n-1} = 0.
IntMat principal_generators(const CurveShape& shape) {
    const std::size_t n = static_cast<std::size_t>(shape.n);
    const Int q(static_cast<unsigned long>(shape.q()));
    IntMat rel(n * (n - 1) / 2, n - 1);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (i < n - 1) rel.at(row, i) = q;
            if (j < n - 1) rel.at(row, j) = -q;
            ++row;
        }
    return rel;
}

}  // namespace

ClassGroupDescriptor class_group(const CurveShape& shape) {
    if (!shape.coprime()) throw DomainError("class group model assumes p does not divide n");
    const std::size_t n = static_cast<std::size_t>(shape.n);
    std::vector<Int> inv = quotient_invariants(principal_generators(shape), n - 1);
    return ClassGroupDescriptor{shape.n, shape.q(), std::move(inv)};
}

ClassGroupContext ClassGroupContext::make(const CurveShape& shape) {
    if (!shape.coprime()) throw DomainError("class group model assumes p does not divide n");
    return ClassGroupContext{shape, smith_normal_form(principal_generators(shape))};
}

bool ClassGroupContext::zero_class(const BranchDivisor& d) const {
    if (static_cast<long long>(d.coeff.size()) != shape.n)
        throw DomainError("divisor has wrong support size");
    if (d.degree() != 0) throw DomainError("divisor must have degree zero");
    std::vector<Int> y;
    y.reserve(d.coeff.size() - 1);
    for (std::size_t k = 0; k + 1 < d.coeff.size(); ++k)
        y.emplace_back(static_cast<long>(d.coeff[k]));
    return snf.in_row_lattice(y);
}

HeartModule fixed_submodule(const CurveShape& shape) {
    if (!shape.coprime()) throw DomainError("fixed submodule assumes p does not divide n");
    const std::size_t n = static_cast<std::size_t>(shape.n);
    const std::uint64_t p = shape.p();
    const Int scale(static_cast<unsigned long>(shape.pp.pow_p(shape.pp.r - 1)));

    // Image of multiplication by p^(r-1) on the class group is
    // (p^(r-1) L)/(q L). In coordinates with respect to the scaled basis
    // p^(r-1) b_k, the generators of q L are the principal relations
    // divided by p^(r-1).
    IntMat rel = principal_generators(shape);
    IntMat inner(rel.rows, n - 1);
    for (std::size_t r = 0; r < rel.rows; ++r)
        for (std::size_t c = 0; c < n - 1; ++c) inner.at(r, c) = rel.at(r, c) / scale;
    std::vector<Int> img = quotient_invariants(inner, n - 1);
    long long dim = 0;
    for (const Int& d : img) {
        if (d != Int(static_cast<unsigned long>(p)))
            throw Error("fixed submodule invariant is not p (internal inconsistency)");
        ++dim;
    }
    return HeartModule{shape.n, p, dim};
}

FpMatrix heart_action(long long n, std::uint64_t p, const std::vector<std::size_t>& perm) {
    if (n < 2) throw DomainError("heart requires n >= 2");
    if (static_cast<unsigned long long>(n) % p == 0)
        throw DomainError("heart action defined only when p does not divide n");
    const std::size_t un = static_cast<std::size_t>(n);
    if (perm.size() != un) throw DomainError("permutation has wrong length");
    std::vector<bool> seen(un, false);
    for (std::size_t v : perm) {
        if (v >= un || seen[v]) throw DomainError("not a permutation");
        seen[v] = true;
    }
    // sigma(b_k) = e_{sigma(k)} - e_{sigma(n-1)} = b_{sigma(k)} - b_{sigma(n-1)}
    // with the convention b_{n-1} = 0.
    FpMatrix m(p, un - 1, un - 1);
    for (std::size_t k = 0; k + 1 < un; ++k) {
        const std::size_t sk = perm[k];
        const std::size_t slast = perm[un - 1];
        if (sk < un - 1) m.at(sk, k) = (m.at(sk, k) + 1) % p;
        if (slast < un - 1) m.at(slast, k) = (m.at(slast, k) + p - 1) % p;
    }
    return m;
}

FpMatrix HeartModule::action(const std::vector<std::size_t>& perm) const {
    return heart_action(n, p, perm);
}

}  // namespace superend
