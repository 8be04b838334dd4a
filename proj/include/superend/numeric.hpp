#ifndef SUPEREND_NUMERIC_HPP
#define SUPEREND_NUMERIC_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "superend/errors.hpp"

namespace superend {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize on its own.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline const Int& numerator(const Rat& r) { return r.get_num(); }
inline const Int& denominator(const Rat& r) { return r.get_den(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_perfect_square(const Int& a) {
    if (a < 0) return false;
    return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& a) {
    if (a < 0) throw DomainError("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// A nonzero rational is a square iff it is positive and both sides of the
// reduced fraction are perfect squares.
inline bool is_square(const Rat& r) {
    if (r < 0) return false;
    return is_perfect_square(numerator(r)) && is_perfect_square(denominator(r));
}

// Residue of an arbitrary-precision integer modulo a machine word, in [0, m).
inline std::uint64_t mod_u64(const Int& a, std::uint64_t m) {
    return mpz_fdiv_ui(a.get_mpz_t(), m);
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace superend

#endif
