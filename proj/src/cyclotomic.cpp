#include "superend/cyclotomic.hpp"

namespace superend {

UniPoly cyclotomic_prime_power(const PrimePower& pp, std::uint64_t i) {
    if (i < 1 || i > pp.r) throw DomainError("cyclotomic_prime_power: i out of range");
    const std::uint64_t step = pp.pow_p(i - 1);
    const std::uint64_t deg = (pp.p - 1) * step;
    std::vector<Rat> c(deg + 1, Rat(0));
    for (std::uint64_t e = 0; e <= deg; e += step) c[e] = 1;
    return UniPoly(Rationals{}, std::move(c));
}

UniPoly all_ones_polynomial(const PrimePower& pp) {
    std::vector<Rat> c(pp.q - 1 + 1, Rat(1));
    return UniPoly(Rationals{}, std::move(c));
}

}  // namespace superend
