#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "superend/divisor.hpp"
#include "superend/sweep.hpp"

using namespace superend;

namespace {

CurveShape shape(long long n, std::uint64_t q) {
    return CurveShape::make(n, PrimePower::from_q(q));
}

IntMat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, long span) {
    std::uniform_int_distribution<long> d(-span, span);
    IntMat m(r, c);
    for (auto& v : m.a) v = d(rng);
    return m;
}

std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("smith normal form is certified by its transforms") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> sz(1, 6);
        const auto A = random_mat(rng, sz(rng), sz(rng), 9);
        const auto res = smith_normal_form(A);
        // S = U A V exactly
        CHECK(res.S == mat_mul(mat_mul(res.U, A), res.V));
        // transforms unimodular
        CHECK(abs(mat_det(res.U)) == 1);
        CHECK(abs(mat_det(res.V)) == 1);
        // diagonal, nonnegative, divisibility chain, zeros trailing
        const auto d = res.diagonal();
        for (std::size_t i = 0; i < res.S.rows; ++i)
            for (std::size_t j = 0; j < res.S.cols; ++j)
                if (i != j) CHECK(res.S.at(i, j) == 0);
        for (std::size_t t = 0; t < d.size(); ++t) {
            CHECK(d[t] >= 0);
            if (t + 1 < d.size() && d[t + 1] != 0) {
                REQUIRE(d[t] != 0);
                CHECK(d[t + 1] % d[t] == 0);
            }
        }
    }
}

TEST_CASE("smith invariants equal determinantal-divisor quotients") {
    std::mt19937_64 rng(4096);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> sz(1, 4);
        const auto A = random_mat(rng, sz(rng), sz(rng), 6);
        std::vector<std::vector<Int>> m(A.rows, std::vector<Int>(A.cols));
        for (std::size_t i = 0; i < A.rows; ++i)
            for (std::size_t j = 0; j < A.cols; ++j) m[i][j] = A.at(i, j);
        const auto expected = oracle::invariant_factors_via_minors(m);
        const auto res = smith_normal_form(A);
        std::vector<Int> got;
        for (const auto& d : res.diagonal())
            if (d != 0) got.push_back(d);
        CHECK(got == expected);
    }
}

TEST_CASE("row lattice membership") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> sz(1, 5);
        std::uniform_int_distribution<long> comb(-4, 4);
        const std::size_t rows = sz(rng), cols = sz(rng);
        const auto A = random_mat(rng, rows, cols, 7);
        const auto res = smith_normal_form(A);
        // integer combinations of rows are members
        std::vector<Int> y(cols, Int(0));
        for (std::size_t i = 0; i < rows; ++i) {
            const long c = comb(rng);
            for (std::size_t j = 0; j < cols; ++j) y[j] += c * A.at(i, j);
        }
        CHECK(res.in_row_lattice(y));
    }
    // explicit non-member: lattice 2Z^2
    IntMat twoZ(2, 2);
    twoZ.at(0, 0) = 2;
    twoZ.at(1, 1) = 2;
    auto res = smith_normal_form(twoZ);
    CHECK(res.in_row_lattice({Int(4), Int(-2)}));
    CHECK_FALSE(res.in_row_lattice({Int(1), Int(0)}));
}

TEST_CASE("principality criterion") {
    auto s43 = shape(4, 3);
    CHECK(is_principal(BranchDivisor{{3, -3, 0, 0}}, s43));
    CHECK_FALSE(is_principal(BranchDivisor{{1, -1, 0, 0}}, s43));
    CHECK(is_principal(BranchDivisor{{0, 0, 0, 0}}, s43));
    CHECK(is_principal(BranchDivisor{{0, 0, 0, 0, 0}}, shape(5, 7)));
    CHECK_THROWS_AS(is_principal(BranchDivisor{{1, 0, 0, 0}}, s43), DomainError);  // degree 1
    CHECK_THROWS_AS(is_principal(BranchDivisor{{1, -1, 0}}, s43), DomainError);    // wrong size
    CHECK_THROWS_AS(is_principal(BranchDivisor{{0, 0, 0, 0, 0, 0, 0, 0}}, shape(8, 4)),
                    DomainError);
}

TEST_CASE("class group invariants") {
    auto cg43 = class_group(shape(4, 3));
    CHECK(cg43.elementary_divisors == std::vector<Int>{3, 3, 3});
    CHECK(cg43.order() == 27);
    CHECK(class_group(shape(5, 2)).elementary_divisors == std::vector<Int>{2, 2, 2, 2});
    CHECK(class_group(shape(2, 5)).elementary_divisors == std::vector<Int>{5});
    CHECK_THROWS_AS(class_group(shape(8, 4)), DomainError);

    for (const auto& s : coprime_shapes(2, 7, 16)) {
        auto cg = class_group(s);
        CHECK(static_cast<long long>(cg.elementary_divisors.size()) == s.n - 1);
        Int q(static_cast<unsigned long>(s.q()));
        for (const auto& d : cg.elementary_divisors) CHECK(d == q);
        Int expect(1);
        for (long long i = 0; i < s.n - 1; ++i) expect *= q;
        CHECK(cg.order() == expect);
    }
}

TEST_CASE("principality agrees with coset membership") {
    std::mt19937_64 rng(555);
    for (const auto& s : coprime_shapes(2, 6, 9)) {
        const auto ctx = ClassGroupContext::make(s);
        const long long span = 3 * static_cast<long long>(s.q());
        std::uniform_int_distribution<long long> dist(-span, span);
        for (int t = 0; t < 300; ++t) {
            BranchDivisor d;
            d.coeff.resize(static_cast<std::size_t>(s.n));
            long long sum = 0;
            for (std::size_t k = 0; k + 1 < d.coeff.size(); ++k) {
                d.coeff[k] = dist(rng);
                sum += d.coeff[k];
            }
            d.coeff.back() = -sum;
            CHECK(is_principal(d, s) == ctx.zero_class(d));
        }
    }
}

TEST_CASE("fixed submodule dimensions") {
    CHECK(fixed_submodule(shape(5, 4)).basis_dimension == 4);
    CHECK(fixed_submodule(shape(5, 4)).p == 2);
    CHECK(fixed_submodule(shape(4, 3)).basis_dimension == 3);
    CHECK(fixed_submodule(shape(6, 25)).basis_dimension == 5);
    CHECK(fixed_submodule(shape(6, 25)).p == 5);
    CHECK_THROWS_AS(fixed_submodule(shape(8, 4)), DomainError);
    for (const auto& s : coprime_shapes(2, 8, 27))
        CHECK(fixed_submodule(s).basis_dimension == s.n - 1);
}

TEST_CASE("heart action: pinned matrices") {
    auto id = heart_action(4, 3, {0, 1, 2, 3});
    CHECK(id == FpMatrix::identity(3, 3));

    auto swap01 = heart_action(3, 2, {1, 0, 2});
    FpMatrix expect(2, 2, 2);
    expect.at(0, 1) = 1;
    expect.at(1, 0) = 1;
    CHECK(swap01 == expect);

    CHECK_THROWS_AS(heart_action(4, 2, {0, 1, 2, 3}), DomainError);  // p | n
    CHECK_THROWS_AS(heart_action(3, 2, {0, 0, 2}), DomainError);     // not a permutation
}

TEST_CASE("heart action is a homomorphism into GL") {
    std::mt19937_64 rng(909);
    const struct { long long n; std::uint64_t p; } cases[] = {{3, 2}, {5, 3}, {7, 2}, {6, 5}};
    for (auto [n, p] : cases) {
        const auto un = static_cast<std::size_t>(n);
        for (int trial = 0; trial < 25; ++trial) {
            auto sigma = random_perm(rng, un);
            auto tau = random_perm(rng, un);
            std::vector<std::size_t> comp(un);
            for (std::size_t x = 0; x < un; ++x) comp[x] = sigma[tau[x]];
            auto ms = heart_action(n, p, sigma);
            auto mt = heart_action(n, p, tau);
            auto mc = heart_action(n, p, comp);
            CHECK(mc == fp_mul(ms, mt));
            CHECK(fp_invertible(ms));
        }
    }
}
