#ifndef SUPEREND_CYCLOTOMIC_HPP
#define SUPEREND_CYCLOTOMIC_HPP

#include "superend/polynomial.hpp"
#include "superend/primality.hpp"

namespace superend {

// Phi_{p^i}(t) = t^((p-1)p^(i-1)) + ... + t^(p^(i-1)) + 1: exactly p terms,
// exponents the multiples of p^(i-1), degree (p-1)p^(i-1). Requires 1 <= i <= r.
UniPoly cyclotomic_prime_power(const PrimePower& pp, std::uint64_t i);

// (t^q - 1)/(t - 1) = t^(q-1) + ... + t + 1, the product of
// cyclotomic_prime_power(pp, i) over i = 1..r. Minimal polynomial of the
// order-q cover automorphism on the jacobian.
UniPoly all_ones_polynomial(const PrimePower& pp);

}  // namespace superend

#endif
