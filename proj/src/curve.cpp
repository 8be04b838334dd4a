#include "superend/curve.hpp"

#include <string>

namespace superend {

CurveShape CurveShape::make(long long n, const PrimePower& pp) {
    if (n < 2) throw DomainError("curve shape requires n >= 2");
    const auto q = static_cast<long long>(pp.q);
    const auto p = static_cast<long long>(pp.p);
    if (n % p != 0) return CurveShape{n, pp, Case::Coprime};
    if (n % q == 0) return CurveShape{n, pp, Case::Divisible};
    throw DomainError("inadmissible shape: p | n but q does not divide n (n = " +
                      std::to_string(n) + ", q = " + std::to_string(q) + ")");
}

long long MultiplicityTable::at(std::uint64_t i) const {
    if (i < 1 || i >= shape.q()) throw DomainError("multiplicity index out of range");
    return m[i - 1];
}

long long MultiplicityTable::sum() const {
    long long s = 0;
    for (long long v : m) s += v;
    return s;
}

long long genus(const CurveShape& shape) {
    const long long q = static_cast<long long>(shape.q());
    if (shape.coprime()) return (q - 1) * (shape.n - 1) / 2;
    return (q - 1) * (shape.n - 2) / 2;
}

std::vector<LatticePoint> interior_lattice_points(const CurveShape& shape) {
    if (!shape.coprime())
        throw DomainError("lattice point count is only defined when p does not divide n");
    const long long n = shape.n;
    const long long q = static_cast<long long>(shape.q());
    std::vector<LatticePoint> pts;
    // i outer so the output is sorted by (i, j)
    for (long long i = 1; i < q; ++i)
        for (long long j = 1; j < n; ++j)
            if (q * j + n * i < n * q) pts.push_back(LatticePoint{j, i});
    return pts;
}

MultiplicityTable multiplicity_table(const CurveShape& shape) {
    if (!shape.coprime())
        throw DomainError("multiplicity table is only defined when p does not divide n");
    const long long n = shape.n;
    const long long q = static_cast<long long>(shape.q());
    std::vector<long long> m(q - 1);
    for (long long i = 1; i < q; ++i) m[i - 1] = (n * i) / q;
    return MultiplicityTable{shape, std::move(m)};
}

long long primitive_mass(const CurveShape& shape) {
    const MultiplicityTable t = multiplicity_table(shape);
    const long long p = static_cast<long long>(shape.p());
    long long s = 0;
    for (long long i = 1; i < static_cast<long long>(shape.q()); ++i)
        if (i % p != 0) s += t.at(i);
    return s;
}

UniPoly spectrum_minimal_polynomial(const CurveShape& shape) {
    const MultiplicityTable t = multiplicity_table(shape);
    const std::uint64_t q = shape.q();
    const std::uint64_t p = shape.p();
    // order of zeta^(-i) is q / p^(v_p(i)); record which exact orders occur
    std::vector<bool> order_seen(shape.pp.r + 1, false);
    for (std::uint64_t i = 1; i < q; ++i) {
        if (t.at(i) <= 0) continue;
        std::uint64_t v = 0, x = i;
        while (x % p == 0) {
            x /= p;
            ++v;
        }
        order_seen[shape.pp.r - v] = true;
    }
    UniPoly prod = UniPoly::constant(Rat(1));
    for (std::uint64_t s = 1; s <= shape.pp.r; ++s)
        if (order_seen[s]) prod *= cyclotomic_prime_power(shape.pp, s);
    return prod;
}

}  // namespace superend
