#include "superend/fpmatrix.hpp"

namespace superend {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 powmod_u(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = static_cast<u64>(u128(r) * a % p);
        a = static_cast<u64>(u128(a) * a % p);
        e >>= 1;
    }
    return r;
}
}  // namespace

FpMatrix FpMatrix::identity(u64 p, std::size_t n) {
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix fp_mul(const FpMatrix& x, const FpMatrix& y) {
    if (x.cols != y.rows || x.p != y.p) throw DomainError("FpMatrix product mismatch");
    FpMatrix r(x.p, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const u64 v = x.at(i, k);
            if (!v) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = static_cast<u64>((r.at(i, j) + u128(v) * y.at(k, j)) % x.p);
        }
    return r;
}

std::size_t fp_rank(FpMatrix m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        const u64 inv = powmod_u(m.at(rank, col), m.p - 2, m.p);
        for (std::size_t j = 0; j < m.cols; ++j)
            m.at(rank, j) = static_cast<u64>(u128(m.at(rank, j)) * inv % m.p);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col) == 0) continue;
            const u64 f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j) {
                u64 sub = static_cast<u64>(u128(f) * m.at(rank, j) % m.p);
                m.at(i, j) = (m.at(i, j) + m.p - sub) % m.p;
            }
        }
        ++rank;
    }
    return rank;
}

bool fp_invertible(const FpMatrix& m) {
    return m.rows == m.cols && fp_rank(m) == m.rows;
}

}  // namespace superend
