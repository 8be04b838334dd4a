#ifndef SUPEREND_FPMATRIX_HPP
#define SUPEREND_FPMATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "superend/errors.hpp"

namespace superend {

// Small dense matrix over F_p, row major.
struct FpMatrix {
    std::uint64_t p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    FpMatrix() = default;
    FpMatrix(std::uint64_t p, std::size_t r, std::size_t c)
        : p(p), rows(r), cols(c), a(r * c, 0) {}

    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static FpMatrix identity(std::uint64_t p, std::size_t n);
    bool operator==(const FpMatrix&) const = default;
};

FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y);
// Rank by Gaussian elimination; a square matrix is invertible iff full rank.
std::size_t fp_rank(FpMatrix m);
bool fp_invertible(const FpMatrix& m);

}  // namespace superend

#endif
