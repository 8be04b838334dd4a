#ifndef SUPEREND_SMITH_HPP
#define SUPEREND_SMITH_HPP

#include <cstddef>
#include <vector>

#include "superend/numeric.hpp"

namespace superend {

// Dense integer matrix, row major.
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMat identity(std::size_t n);
    bool operator==(const IntMat&) const = default;
};

IntMat mat_mul(const IntMat& x, const IntMat& y);

// Determinant by fraction-free (Bareiss) elimination; used to certify that
// the tracked transforms are unimodular.
Int mat_det(const IntMat& m);

// S = U * A * V with U, V unimodular, S diagonal with nonnegative entries
// d_1 | d_2 | ... ; rank = number of nonzero diagonal entries.
struct SmithResult {
    IntMat S, U, V;
    std::size_t rank = 0;

    std::vector<Int> diagonal() const;
    // y in the row lattice of the original A?
    bool in_row_lattice(const std::vector<Int>& y) const;
};

SmithResult smith_normal_form(const IntMat& A);

// Invariant factors of Z^ambient_rank / (row lattice of rel): the nonzero
// diagonal entries != 1 of the SNF, padded with 0 for each free rank.
std::vector<Int> quotient_invariants(const IntMat& rel, std::size_t ambient_rank);

}  // namespace superend

#endif
