#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superend/endopredict.hpp"
#include "superend/report.hpp"
#include "superend/sweep.hpp"

using namespace superend;

namespace {

CurveShape shape(long long n, std::uint64_t q) {
    return CurveShape::make(n, PrimePower::from_q(q));
}

GaloisCertificate cert_at(CertLevel level) {
    GaloisCertificate c;
    c.level = level;
    return c;
}

}  // namespace

TEST_CASE("predict: pinned descriptors") {
    auto d = predict(shape(5, 9), cert_at(CertLevel::CertifiedSn));
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0].conductor == 3);
    CHECK(d.factors[0].degree == 2);
    CHECK(d.factors[0].component_dimension == 4);
    CHECK(d.factors[1].conductor == 9);
    CHECK(d.factors[1].degree == 6);
    CHECK(d.factors[1].component_dimension == 12);
    CHECK(d.jacobian_dimension == 16);
    CHECK(d.total_algebra_dimension == 8);
    CHECK_FALSE(d.conditional);
    CHECK_FALSE(d.nq55_caveat);
    CHECK(d.factors[1].cm_field);
    CHECK(d.factors[1].real_subfield_degree == 3);

    auto h = predict(shape(5, 2), cert_at(CertLevel::CertifiedSn));
    REQUIRE(h.factors.size() == 1);
    CHECK(h.factors[0].conductor == 2);
    CHECK(h.factors[0].degree == 1);
    CHECK(h.factors[0].component_dimension == 2);
    CHECK_FALSE(h.factors[0].cm_field);

    auto weak = predict(shape(5, 8), cert_at(CertLevel::SubsetAnOnly));
    CHECK(weak.conditional);
    CHECK(weak.jacobian_dimension == 14);

    CHECK(predict(shape(5, 5), cert_at(CertLevel::CertifiedSn)).nq55_caveat);
    CHECK_FALSE(predict(shape(6, 5), cert_at(CertLevel::CertifiedSn)).nq55_caveat);

    CHECK_THROWS_AS(predict(shape(4, 3), cert_at(CertLevel::CertifiedSn)), DomainError);
    CHECK_THROWS_AS(predict(shape(2, 5), cert_at(CertLevel::CertifiedSn)), DomainError);
}

TEST_CASE("predict: divisible case equals the reduced coprime numerology") {
    auto div = predict(shape(8, 4), cert_at(CertLevel::CertifiedSn));
    CHECK(div.reduced_degree == 7);
    CHECK(div.jacobian_dimension == 9);  // (4-1)(8-2)/2
    auto cop = predict(shape(7, 4), cert_at(CertLevel::CertifiedSn));
    REQUIRE(div.factors.size() == cop.factors.size());
    for (std::size_t i = 0; i < div.factors.size(); ++i) {
        CHECK(div.factors[i].component_dimension == cop.factors[i].component_dimension);
        CHECK(div.factors[i].degree == cop.factors[i].degree);
        CHECK(div.factors[i].conductor == cop.factors[i].conductor);
    }
    CHECK(div.jacobian_dimension == cop.jacobian_dimension);
}

TEST_CASE("centralizer dimension bound") {
    CHECK(centralizer_dim_bound(16, 8) == 16);
    CHECK(centralizer_dim_bound(2, 4) == 1);
    CHECK_THROWS_AS(centralizer_dim_bound(5, 3), DomainError);  // 3 does not divide 10
    CHECK_THROWS_AS(centralizer_dim_bound(0, 1), DomainError);
}

TEST_CASE("decomposition report") {
    auto d58 = decomposition_report(shape(5, 8));
    CHECK(d58 == std::vector<std::pair<int, long long>>{{1, 2}, {2, 4}, {3, 8}});
    CHECK(decomposition_report(shape(4, 3)) ==
          std::vector<std::pair<int, long long>>{{1, 3}});
    auto d725 = decomposition_report(shape(7, 25));
    CHECK(d725 == std::vector<std::pair<int, long long>>{{1, 12}, {2, 60}});
    CHECK_THROWS_AS(decomposition_report(shape(8, 4)), DomainError);
}

TEST_CASE("descriptor invariants on a sweep") {
    const auto cert = cert_at(CertLevel::CertifiedSn);
    for (const auto& s : coprime_shapes(5, 20, 64)) {
        const auto d = predict(s, cert);
        long long sum = 0, degsum = 0;
        for (const auto& f : d.factors) {
            sum += f.component_dimension;
            degsum += f.degree;
        }
        CHECK(sum == genus(s));
        CHECK(degsum == d.total_algebra_dimension);
        CHECK(d.total_algebra_dimension == static_cast<long long>(s.q()) - 1);
        CHECK(d.factors.back().component_dimension == primitive_mass(s));

        const auto rep = decomposition_report(s);
        REQUIRE(rep.size() == d.factors.size());
        for (std::size_t i = 0; i < rep.size(); ++i)
            CHECK(rep[i].second == d.factors[i].component_dimension);
    }
}

TEST_CASE("descriptor serialization is deterministic") {
    const auto d = predict(shape(7, 27), cert_at(CertLevel::CertifiedAn));
    CHECK(endo_to_json(d).dump() == endo_to_json(d).dump());

    SweepOptions a{12, 32, 1};
    SweepOptions b{12, 32, 4};
    const auto digest1 = endo_sweep_digest(a);
    const auto digest2 = endo_sweep_digest(b);
    CHECK(digest1 == digest2);
    CHECK(digest1 == endo_sweep_digest(a));
    CHECK_FALSE(digest1.empty());
}
