#ifndef SUPEREND_PRIMALITY_HPP
#define SUPEREND_PRIMALITY_HPP

#include <cstdint>

#include "superend/errors.hpp"

namespace superend {

// Deterministic Miller-Rabin with the fixed witness set
// {2,3,5,7,11,13,17,19,23,29,31,37}, correct for all n < 3.3e24 and in
// particular on the whole uint64 range.
bool is_prime_u64(std::uint64_t n);

// A validated pair (p, r) with q = p^r.
struct PrimePower {
    std::uint64_t p = 0;
    std::uint64_t r = 0;
    std::uint64_t q = 0;

    static PrimePower make(std::uint64_t p, std::uint64_t r);
    // Factors q as p^r; rejects inputs that are not prime powers.
    static PrimePower from_q(std::uint64_t q);

    std::uint64_t phi() const;  // (p-1) p^(r-1)
    // phi(p^i) for 1 <= i <= r
    std::uint64_t phi_at(std::uint64_t i) const;
    std::uint64_t pow_p(std::uint64_t i) const;  // p^i, 0 <= i <= r

    bool operator==(const PrimePower&) const = default;
};

}  // namespace superend

#endif
