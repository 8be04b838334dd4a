#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superend/rigidity.hpp"
#include "superend/sweep.hpp"

using namespace superend;

namespace {
CurveShape shape(long long n, std::uint64_t q) {
    return CurveShape::make(n, PrimePower::from_q(q));
}
}  // namespace

TEST_CASE("set A") {
    CHECK(set_A(shape(5, 8)) == std::vector<std::uint64_t>{1});
    CHECK(set_A(shape(4, 17)) == std::vector<std::uint64_t>{1, 2, 3, 4});
    CHECK(set_A(shape(5, 4)).empty());
    CHECK(set_A(shape(4, 27)) == std::vector<std::uint64_t>{1, 2, 4, 5});  // skip 3, 6
    CHECK_THROWS_AS(set_A(shape(8, 4)), DomainError);
}

TEST_CASE("set A is exactly the vanishing locus of the tuple") {
    for (const auto& s : coprime_shapes(2, 20, 64)) {
        const auto t = multiplicity_table(s);
        std::vector<std::uint64_t> zero_idx;
        for (std::uint64_t i = 1; i < s.q(); ++i)
            if (i % s.p() != 0 && t.at(i) == 0) zero_idx.push_back(i);
        CHECK(set_A(s) == zero_idx);
    }
}

TEST_CASE("multiplier predicate") {
    CHECK(multiplier_preserves_tuple(shape(5, 8), 1));
    CHECK_FALSE(multiplier_preserves_tuple(shape(5, 8), 3));
    CHECK(first_failing_index(multiplicity_table(shape(5, 8)), 3) == 1);  // m_1=0, m_3=1
    CHECK_FALSE(multiplier_preserves_tuple(shape(4, 5), 4));              // m_1=0, m_4=3
    CHECK_THROWS_AS(multiplier_preserves_tuple(shape(5, 8), 0), DomainError);
    CHECK_THROWS_AS(multiplier_preserves_tuple(shape(5, 8), 8), DomainError);
    CHECK_THROWS_AS(multiplier_preserves_tuple(shape(5, 8), 2), DomainError);  // not a unit
    CHECK_THROWS_AS(multiplier_preserves_tuple(shape(8, 4), 3), DomainError);
}

TEST_CASE("identity multiplier always preserves") {
    for (const auto& s : coprime_shapes(2, 16, 32))
        CHECK(multiplier_preserves_tuple(s, 1));
}

TEST_CASE("preserving multipliers are closed under powers") {
    for (const auto& s : coprime_shapes(2, 10, 32)) {
        const auto t = multiplicity_table(s);
        for (std::uint64_t m = 1; m < s.q(); ++m) {
            if (m % s.p() == 0) continue;
            if (!multiplier_preserves_tuple(t, m)) continue;
            std::uint64_t power = m;
            for (int e = 2; e <= 6; ++e) {
                power = power * m % s.q();
                if (power == 0) break;  // q = 2 edge: 1*1 stays 1, never 0
                CHECK(multiplier_preserves_tuple(t, power));
            }
        }
    }
}

TEST_CASE("rigidity verdicts: pinned shapes") {
    auto v = rigidity_check(shape(5, 8));
    CHECK(v.rigid);
    CHECK_FALSE(v.counterexample.has_value());
    CHECK(v.set_a == std::vector<std::uint64_t>{1});
    CHECK(v.failing_index.has_value());  // witness for m = 3

    CHECK(rigidity_check(shape(4, 13)).rigid);   // boundary q >= 1+3n of the source argument
    CHECK(rigidity_check(shape(6, 25)).rigid);
    CHECK(rigidity_check(shape(4, 5)).rigid);
    CHECK(rigidity_check(shape(1000, 3)).rigid);

    CHECK_THROWS_AS(rigidity_check(shape(3, 5)), DomainError);
    CHECK_THROWS_AS(rigidity_check(shape(2, 7)), DomainError);
    CHECK_THROWS_AS(rigidity_check(shape(8, 4)), DomainError);
}

TEST_CASE("exhaustive rigidity on a medium sweep") {
    for (const auto& s : coprime_shapes(4, 20, 128)) {
        auto v = rigidity_check(s);
        CHECK(v.rigid);
        if (!v.rigid)
            MESSAGE("counterexample at n=", s.n, " q=", s.q(), " m=", *v.counterexample);
    }
}
