#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "superend/galois.hpp"

using namespace superend;

namespace {

bool certified(CertLevel level) {
    return level == CertLevel::CertifiedSn || level == CertLevel::CertifiedAn;
}

}  // namespace

TEST_CASE("reduce_and_cycle_type") {
    const auto f = upoly_desc({1, 0, 1});  // x^2 + 1, disc -4
    auto t5 = reduce_and_cycle_type(f, 5);
    CHECK(t5.parts == std::vector<int>{1, 1});
    auto t3 = reduce_and_cycle_type(f, 3);
    CHECK(t3.parts == std::vector<int>{2});
    CHECK_THROWS_AS(reduce_and_cycle_type(f, 2), BadPrimeError);
    // p | lc
    CHECK_THROWS_AS(reduce_and_cycle_type(upoly_desc({3, 0, 1, 1}), 3), BadPrimeError);
    // partitions always sum to n
    const auto g = upoly_desc({1, 0, 0, 0, -1, -1});
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull})
        CHECK(reduce_and_cycle_type(g, p).sum() == 5);
}

TEST_CASE("irreducibility evidence") {
    auto ev = irreducibility_evidence(upoly_desc({1, 0, 0, 0, -1, -1}), 50);
    CHECK(ev.kind == IrreducibilityEvidence::Kind::IrreducibleCertified);
    REQUIRE(ev.certifying_prime.has_value());
    CHECK(*ev.certifying_prime < 50);
    // the certificate is real: that prime keeps the quintic in one piece
    auto t = reduce_and_cycle_type(upoly_desc({1, 0, 0, 0, -1, -1}), *ev.certifying_prime);
    CHECK(t.parts == std::vector<int>{5});

    auto red = irreducibility_evidence(upoly_desc({1, 0, -1}), 50);
    CHECK(red.kind == IrreducibilityEvidence::Kind::ReducibleWitness);
    REQUIRE(red.rational_root.has_value());
    CHECK((*red.rational_root == Rat(1) || *red.rational_root == Rat(-1)));
    CHECK(red.factor_degrees == std::vector<int>{1, 1});

    // x^4 + 1 is irreducible over Q but reducible mod every prime
    auto unk = irreducibility_evidence(upoly_desc({1, 0, 0, 0, 1}), 30);
    CHECK(unk.kind == IrreducibilityEvidence::Kind::Unknown);

    CHECK_THROWS_AS(irreducibility_evidence(upoly_desc({1, 2, 1}), 10), DomainError);
}

TEST_CASE("discriminant square test") {
    CHECK_FALSE(discriminant_square_test(upoly_desc({1, 0, 0, 0, -1, -1})));  // 2869
    CHECK(discriminant_square_test(upoly_desc({1, 0, -3, -1})));              // 81
    CHECK_FALSE(discriminant_square_test(upoly_desc({1, 0, 1})));             // -4
    CHECK_THROWS_AS(discriminant_square_test(upoly_desc({1, 2, 1})), DomainError);
}

TEST_CASE("discriminant is invariant under integer shifts") {
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<long> shift(-20, 20);
    const UniPoly polys[] = {
        upoly_desc({1, 0, 0, 0, -1, -1}),
        upoly_desc({1, 0, -3, -1}),
        upoly_desc({1, 5, 20, 60, 120, 120}),
        upoly_desc({2, -1, 0, 7}),
    };
    for (const auto& f : polys) {
        const Rat d = discriminant(f);
        const bool sq = discriminant_square_test(f);
        for (int k = 0; k < 8; ++k) {
            auto g = f.shifted(Rat(shift(rng)));
            CHECK(discriminant(g) == d);
            CHECK(discriminant_square_test(g) == sq);
        }
    }
}

TEST_CASE("types_force_irreducibility") {
    // a 5-cycle rules out every proper factor degree
    CHECK(types_force_irreducibility({CycleType{{5}}}, 5));
    // (2,2) and (1,1,1,1) both admit a degree-2 subsum
    CHECK_FALSE(types_force_irreducibility({CycleType{{2, 2}}, CycleType{{1, 1, 1, 1}}}, 4));
    // (4,1) blocks k=2,3; (3,2) blocks k=1,4: together they force irreducibility
    CHECK(types_force_irreducibility({CycleType{{4, 1}}, CycleType{{3, 2}}}, 5));
    CHECK_FALSE(types_force_irreducibility({}, 5));
}

TEST_CASE("certify: acceptance anchors") {
    auto s5 = certify(upoly_desc({1, 0, 0, 0, -1, -1}), 200);
    CHECK(s5.level == CertLevel::CertifiedSn);
    CHECK(s5.disc == Rat(2869));
    CHECK_FALSE(s5.disc_is_square);

    // 120 * exp_5(x)
    auto exp5 = certify(upoly_desc({1, 5, 20, 60, 120, 120}), 200);
    CHECK(exp5.level == CertLevel::CertifiedSn);

    auto v4 = certify(upoly_desc({1, 0, 0, 0, 1}), 200);
    CHECK_FALSE(certified(v4.level));
    CHECK(v4.level == CertLevel::SubsetAnOnly);  // disc 256 is square, group inside A_4
}

TEST_CASE("certify: soundness corpus of known groups, degree <= 7") {
    struct Entry {
        const char* name;
        UniPoly f;
        bool is_sn;  // true Galois group is the full symmetric group
        bool is_an;  // true Galois group is the alternating group
        CertLevel expected;  // deterministic outcome at budget 200
    };
    const Entry corpus[] = {
        {"x^2+1 / S2", upoly_desc({1, 0, 1}), true, false, CertLevel::CertifiedSn},
        {"x^3-2 / S3", upoly_desc({1, 0, 0, -2}), true, false, CertLevel::CertifiedSn},
        {"x^3-3x-1 / C3=A3", upoly_desc({1, 0, -3, -1}), false, true, CertLevel::CertifiedAn},
        {"x^4+1 / V4", upoly_desc({1, 0, 0, 0, 1}), false, false, CertLevel::SubsetAnOnly},
        {"x^4+x^3+x^2+x+1 / C4", upoly_desc({1, 1, 1, 1, 1}), false, false,
         CertLevel::IrreducibleOnly},
        {"x^4-2 / D4", upoly_desc({1, 0, 0, 0, -2}), false, false, CertLevel::IrreducibleOnly},
        {"x^4+8x+12 / A4", upoly_desc({1, 0, 0, 8, 12}), false, true, CertLevel::CertifiedAn},
        {"x^4-x-1 / S4", upoly_desc({1, 0, 0, -1, -1}), true, false, CertLevel::CertifiedSn},
        {"cos(2pi/11) quintic / C5", upoly_desc({1, 1, -4, -3, 3, 1}), false, false,
         CertLevel::SubsetAnOnly},
        {"x^5-5x+12 / D5", upoly_desc({1, 0, 0, 0, -5, 12}), false, false,
         CertLevel::SubsetAnOnly},
        {"x^5-2 / F20", upoly_desc({1, 0, 0, 0, 0, -2}), false, false,
         CertLevel::IrreducibleOnly},
        {"x^5+20x+16 / A5", upoly_desc({1, 0, 0, 0, 20, 16}), false, true,
         CertLevel::CertifiedAn},
        {"x^5-x-1 / S5", upoly_desc({1, 0, 0, 0, -1, -1}), true, false, CertLevel::CertifiedSn},
        {"phi_7 / C6", upoly_desc({1, 1, 1, 1, 1, 1, 1}), false, false,
         CertLevel::IrreducibleOnly},
        {"phi_9 / C6", upoly_desc({1, 0, 0, 1, 0, 0, 1}), false, false,
         CertLevel::IrreducibleOnly},
        {"x^6-3x^2-1 / A4 on 6", upoly_desc({1, 0, 0, 0, -3, 0, -1}), false, false,
         CertLevel::SubsetAnOnly},
        {"x^6-x^4-1 / even S4 on 6", upoly_desc({1, 0, -1, 0, 0, 0, -1}), false, false,
         CertLevel::SubsetAnOnly},
        {"PSL(2,5) sextic", upoly_desc({1, -2, 1, -5, 2, 4, 1}), false, false,
         CertLevel::SubsetAnOnly},
        {"x^6+24x-20 / A6", upoly_desc({1, 0, 0, 0, 0, 24, -20}), false, true,
         CertLevel::CertifiedAn},
        {"gauss period p=29 / C7", upoly_desc({1, 1, -12, -7, 28, 14, -9, 1}), false, false,
         CertLevel::SubsetAnOnly},
        {"x^7-7x+3 / PSL(2,7)", upoly_desc({1, 0, 0, 0, 0, 0, -7, 3}), false, false,
         CertLevel::SubsetAnOnly},
        {"x^7-2 / F42", upoly_desc({1, 0, 0, 0, 0, 0, 0, -2}), false, false,
         CertLevel::IrreducibleOnly},
        {"x^7-x-1 / S7", upoly_desc({1, 0, 0, 0, 0, 0, -1, -1}), true, false,
         CertLevel::CertifiedSn},
    };
    for (const auto& e : corpus) {
        INFO(e.name);
        const auto cert = certify(e.f, 200);
        // soundness: never claim S_n or A_n for a group that is not
        if (cert.level == CertLevel::CertifiedSn) CHECK(e.is_sn);
        if (cert.level == CertLevel::CertifiedAn) CHECK(e.is_an);
        // the sampling is deterministic, so the exact level is pinned
        CHECK(cert.level == e.expected);
        // certificate hygiene
        const Int dn = numerator(cert.disc);
        for (const auto& [p, t] : cert.witness_primes) {
            CHECK(t.sum() == cert.n);
            CHECK(mod_u64(dn, p) != 0);
            CHECK(mod_u64(numerator(e.f.lc()), p) != 0);
        }
    }
}

TEST_CASE("certify: honest degradation at small budget, upgrade with more data") {
    // at budget 200 the transposition class of x^6-x-1 (true group S6,
    // density 15/720) happens not to show up; with 600 primes it does
    const auto f = upoly_desc({1, 0, 0, 0, 0, -1, -1});
    CHECK(certify(f, 200).level == CertLevel::IrreducibleOnly);
    CHECK(certify(f, 600).level == CertLevel::CertifiedSn);
}

TEST_CASE("certify rejects bad input") {
    CHECK_THROWS_AS(certify(upoly_desc({1, -1}), 10), DomainError);   // degree 1
    CHECK_THROWS_AS(certify(upoly_desc({1, 2, 1}), 10), DomainError);  // not squarefree
    CHECK(certify(upoly_desc({1, 0, -1}), 10).level == CertLevel::Reducible);
    CHECK(certify(upoly_desc({1, 0, -4, 0}), 10).level == CertLevel::Reducible);  // root 0
    // non-integer coefficients
    UniPoly half(Rationals{}, {make_rat(Int(1), Int(2)), Rat(0), Rat(1)});
    CHECK_THROWS_AS(certify(half, 10), DomainError);
    CHECK_THROWS_AS(reduce_and_cycle_type(half, 5), DomainError);
}
