#include "superend/smith.hpp"

#include <algorithm>

#include "superend/errors.hpp"

namespace superend {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw DomainError("matrix product shape mismatch");
    IntMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Int& v = x.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
        }
    return r;
}

Int mat_det(const IntMat& m) {
    if (m.rows != m.cols) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    IntMat w = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && w.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = v / prev;  // Bareiss division is exact
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

namespace {

// Row/column operations applied simultaneously to S and the transforms, so
// S = U * A * V stays true at every step.
struct Worker {
    IntMat S, U, V;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < S.cols; ++c) std::swap(S.at(i, c), S.at(j, c));
        for (std::size_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < S.rows; ++r) std::swap(S.at(r, i), S.at(r, j));
        for (std::size_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    }
    void row_sub(std::size_t i, std::size_t j, const Int& f) {  // row i -= f * row j
        if (f == 0) return;
        for (std::size_t c = 0; c < S.cols; ++c) S.at(i, c) -= f * S.at(j, c);
        for (std::size_t c = 0; c < U.cols; ++c) U.at(i, c) -= f * U.at(j, c);
    }
    void col_sub(std::size_t i, std::size_t j, const Int& f) {  // col i -= f * col j
        if (f == 0) return;
        for (std::size_t r = 0; r < S.rows; ++r) S.at(r, i) -= f * S.at(r, j);
        for (std::size_t r = 0; r < V.rows; ++r) V.at(r, i) -= f * V.at(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < S.cols; ++c) S.at(i, c) = -S.at(i, c);
        for (std::size_t c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    }

    void diagonalize() {
        const std::size_t n = std::min(S.rows, S.cols);
        for (std::size_t t = 0; t < n; ++t) {
            // smallest nonzero entry of the trailing block as pivot
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best;
            for (std::size_t i = t; i < S.rows; ++i)
                for (std::size_t j = t; j < S.cols; ++j) {
                    const Int& v = S.at(i, j);
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (!found || av < best) {
                        found = true;
                        best = av;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < S.rows; ++i) {
                    if (S.at(i, t) == 0) continue;
                    row_sub(i, t, S.at(i, t) / S.at(t, t));
                    if (S.at(i, t) != 0) {
                        swap_rows(t, i);  // remainder is strictly smaller
                        clean = false;
                    }
                }
                for (std::size_t j = t + 1; j < S.cols; ++j) {
                    if (S.at(t, j) == 0) continue;
                    col_sub(j, t, S.at(t, j) / S.at(t, t));
                    if (S.at(t, j) != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
                if (clean) break;
            }
            if (S.at(t, t) < 0) negate_row(t);
        }
    }

    // Replace diag entries (d_t, d_u), u > t, by (gcd, +-lcm) using row and
    // column operations confined to rows/cols t and u.
    void absorb(std::size_t t, std::size_t u) {
        col_sub(t, u, Int(-1));  // S(u, t) becomes d_u
        while (S.at(u, t) != 0) {
            row_sub(t, u, S.at(t, t) / S.at(u, t));
            swap_rows(t, u);
        }
        // gcd divides the fill-in at (t, u) exactly
        col_sub(u, t, S.at(t, u) / S.at(t, t));
        if (S.at(t, t) < 0) negate_row(t);
        if (S.at(u, u) < 0) negate_row(u);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& A) {
    Worker w{A, IntMat::identity(A.rows), IntMat::identity(A.cols)};
    w.diagonalize();

    const std::size_t n = std::min(A.rows, A.cols);
    for (;;) {
        bool ok = true;
        for (std::size_t t = 0; t + 1 < n && ok; ++t) {
            const Int& a = w.S.at(t, t);
            const Int& b = w.S.at(t + 1, t + 1);
            if (a != 0 && b != 0 && b % a != 0) {
                w.absorb(t, t + 1);
                ok = false;
            }
        }
        if (ok) break;
    }

    SmithResult res{std::move(w.S), std::move(w.U), std::move(w.V), 0};
    for (std::size_t t = 0; t < n; ++t)
        if (res.S.at(t, t) != 0) ++res.rank;
    return res;
}

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> d;
    const std::size_t n = std::min(S.rows, S.cols);
    d.reserve(n);
    for (std::size_t t = 0; t < n; ++t) d.push_back(S.at(t, t));
    return d;
}

bool SmithResult::in_row_lattice(const std::vector<Int>& y) const {
    if (y.size() != S.cols) throw DomainError("vector length mismatch in lattice test");
    // y in rowlat(A)  <=>  y*V in rowlat(S)
    for (std::size_t j = 0; j < S.cols; ++j) {
        Int z(0);
        for (std::size_t i = 0; i < y.size(); ++i) z += y[i] * V.at(i, j);
        if (j < rank) {
            if (z % S.at(j, j) != 0) return false;
        } else {
            if (z != 0) return false;
        }
    }
    return true;
}

std::vector<Int> quotient_invariants(const IntMat& rel, std::size_t ambient_rank) {
    if (rel.cols != ambient_rank) throw DomainError("relation matrix width mismatch");
    const SmithResult snf = smith_normal_form(rel);
    std::vector<Int> inv;
    for (const Int& d : snf.diagonal())
        if (d != 0 && d != 1) inv.push_back(d);
    for (std::size_t i = snf.rank; i < ambient_rank; ++i) inv.push_back(0);
    return inv;
}

}  // namespace superend
