#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superend/cyclotomic.hpp"
#include "superend/log.hpp"
#include "superend/report.hpp"
#include "superend/sweep.hpp"

namespace {

using namespace superend;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitUsage = 64;

// Single-curve commands materialize q-sized tables; past this bound the
// request is almost certainly a typo rather than a computation.
constexpr std::uint64_t kMaxQ = 1u << 20;

PrimePower checked_prime_power(std::uint64_t q) {
    if (q > kMaxQ)
        throw DomainError("q = " + std::to_string(q) + " exceeds the supported bound " +
                          std::to_string(kMaxQ));
    return PrimePower::from_q(q);
}

UniPoly parse_poly(const std::string& csv) {
    std::vector<Int> coeffs;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            coeffs.emplace_back(item);
        } catch (...) {
            throw UsageError("malformed coefficient '" + item + "'");
        }
    }
    if (coeffs.empty()) throw UsageError("empty coefficient list");
    return upoly_desc(coeffs);
}

int cmd_report(const std::string& poly_csv, std::uint64_t q, const std::string& format,
               int prime_budget) {
    const UniPoly f = parse_poly(poly_csv);
    const PrimePower pp = checked_prime_power(q);
    const ReportDocument doc = build_report(f, pp, prime_budget);
    if (format == "json")
        std::cout << report_to_json(doc).dump(2) << "\n";
    else
        std::cout << report_to_text(doc);
    return doc.prediction_refused ? kExitHypothesis : kExitOk;
}

int cmd_sweep(const std::string& kind_name, long long n_max, std::uint64_t q_max, int jobs,
              const std::string& format) {
    SweepKind kind;
    long long n_min;
    if (kind_name == "rigidity") {
        kind = SweepKind::Rigidity;
        n_min = 4;
    } else if (kind_name == "spectrum") {
        kind = SweepKind::Spectrum;
        n_min = 2;
    } else if (kind_name == "classgroup") {
        kind = SweepKind::ClassGroup;
        n_min = 2;
    } else {
        throw UsageError("unknown sweep kind '" + kind_name + "'");
    }
    if (n_max < n_min) throw UsageError("--n-max below the minimal shape for this sweep");
    if (q_max < 2) throw UsageError("--q-max must be at least 2");

    const auto summary = run_sweep(kind, SweepOptions{n_max, q_max, jobs});
    if (format == "json") {
        ordered_json j;
        j["kind"] = to_string(kind);
        j["n_max"] = n_max;
        j["q_max"] = q_max;
        j["shapes"] = summary.shapes_checked;
        j["counterexamples"] = ordered_json::array();
        for (const auto& c : summary.failures)
            j["counterexamples"].push_back(
                {{"n", c.n}, {"q", c.q}, {"detail", c.detail}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : summary.failures)
            std::cout << "counterexample at n=" << c.n << " q=" << c.q << ": " << c.detail
                      << "\n";
        std::cout << summary.failures.size() << " counterexamples / " << summary.shapes_checked
                  << " shapes (" << to_string(kind) << ")\n";
    }
    return summary.failures.empty() ? kExitOk : kExitCounterexample;
}

int cmd_reduce(const std::string& poly_csv, std::uint64_t q, const std::string& format) {
    const UniPoly f = parse_poly(poly_csv);
    const PrimePower pp = checked_prime_power(q);
    const auto red = degree_reduction(f, pp);

    std::vector<std::string> coeffs;
    for (long i = red.h1.degree(); i >= 0; --i)
        coeffs.push_back(red.field.to_string(red.h1.coeff(static_cast<std::size_t>(i))));

    if (format == "json") {
        ordered_json j;
        j["new_degree"] = red.new_degree;
        j["h1_separable"] = red.h1_separable;
        j["h1_coeffs"] = coeffs;
        j["galois_note"] = red.galois_note;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "h1 degree: " << red.new_degree << "\n";
        std::cout << "h1 separable: " << (red.h1_separable ? "yes" : "no") << "\n";
        std::cout << "h1 coefficients over K1 = Q(a) (desc):\n";
        for (const auto& c : coeffs) std::cout << "  " << c << "\n";
        std::cout << "note: " << red.galois_note << "\n";
    }
    return kExitOk;
}

int cmd_galois(const std::string& poly_csv, int prime_budget, const std::string& format) {
    const UniPoly f = parse_poly(poly_csv);
    const auto cert = certify(f, prime_budget);
    if (format == "json") {
        std::cout << galois_to_json(cert).dump(2) << "\n";
    } else {
        std::cout << "level: " << to_string(cert.level) << "\n";
        std::cout << "discriminant: " << to_string(cert.disc)
                  << (cert.disc_is_square ? " (square)" : " (not a square)") << "\n";
        if (cert.irreducibility_witness)
            std::cout << "irreducible mod " << *cert.irreducibility_witness << "\n";
        std::cout << "witness cycle types:\n";
        for (const auto& [p, t] : cert.witness_primes)
            std::cout << "  p=" << p << ": " << t.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_cyclotomic(std::uint64_t q, const std::string& format) {
    const PrimePower pp = checked_prime_power(q);
    const UniPoly pq = all_ones_polynomial(pp);
    UniPoly product = UniPoly::constant(Rat(1));
    std::vector<UniPoly> factors;
    for (std::uint64_t i = 1; i <= pp.r; ++i) {
        factors.push_back(cyclotomic_prime_power(pp, i));
        product *= factors.back();
    }
    const bool consistent = product == pq;
    if (format == "json") {
        ordered_json j;
        j["q"] = q;
        j["p"] = pp.p;
        j["r"] = pp.r;
        j["pq_degree"] = pq.degree();
        j["factors"] = ordered_json::array();
        for (std::uint64_t i = 0; i < pp.r; ++i)
            j["factors"].push_back({{"i", i + 1},
                                    {"conductor", pp.pow_p(i + 1)},
                                    {"degree", factors[i].degree()},
                                    {"poly", factors[i].to_string("t")}});
        j["product_equals_pq"] = consistent;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "(t^" << q << "-1)/(t-1) = " << pq.to_string("t") << "\n";
        for (std::uint64_t i = 0; i < pp.r; ++i)
            std::cout << "Phi_" << pp.pow_p(i + 1) << "(t) = " << factors[i].to_string("t")
                      << "\n";
        std::cout << "product check: " << (consistent ? "ok" : "MISMATCH") << "\n";
    }
    return consistent ? kExitOk : kExitInternal;
}

}  // namespace

int run_main(int argc, char** argv) {
    CLI::App app{"exact invariants of superelliptic curves y^q = f(x) and the predicted "
                 "endomorphism algebra of their jacobians"};
    app.require_subcommand(1);

    std::string poly_csv, format = "text", sweep_kind;
    std::uint64_t q = 0, q_max = 0;
    long long n_max = 0;
    int prime_budget = 200, jobs = 1;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* rep = app.add_subcommand("report", "single-curve invariant report");
    rep->add_option("--poly", poly_csv, "integer coefficients, highest degree first")
        ->required();
    rep->add_option("--q", q, "cover degree, a prime power")->required();
    rep->add_option("--prime-budget", prime_budget, "usable primes sampled for Galois data");
    add_format(rep);

    auto* sw = app.add_subcommand("sweep", "exhaustive verification sweeps");
    sw->add_option("kind", sweep_kind, "rigidity | spectrum | classgroup")->required();
    sw->add_option("--n-max", n_max, "largest degree n")->required();
    sw->add_option("--q-max", q_max, "largest prime power q")->required();
    sw->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 512));
    add_format(sw);

    auto* red = app.add_subcommand("reduce", "degree reduction for q | deg f");
    red->add_option("--poly", poly_csv, "integer coefficients, highest degree first")
        ->required();
    red->add_option("--q", q, "cover degree, a prime power")->required();
    add_format(red);

    auto* gal = app.add_subcommand("galois", "Galois group certification");
    gal->add_option("--poly", poly_csv, "integer coefficients, highest degree first")
        ->required();
    gal->add_option("--prime-budget", prime_budget, "usable primes sampled");
    add_format(gal);

    auto* cyc = app.add_subcommand("cyclotomic", "cyclotomic factorization of (t^q-1)/(t-1)");
    cyc->add_option("--q", q, "prime power")->required();
    add_format(cyc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (rep->parsed()) return cmd_report(poly_csv, q, format, prime_budget);
        if (sw->parsed()) return cmd_sweep(sweep_kind, n_max, q_max, jobs, format);
        if (red->parsed()) return cmd_reduce(poly_csv, q, format);
        if (gal->parsed()) return cmd_galois(poly_csv, prime_budget, format);
        if (cyc->parsed()) return cmd_cyclotomic(q, format);
    } catch (const UsageError& e) {
        superend::logging::error(e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        superend::logging::error(e.what());
        return kExitHypothesis;
    } catch (const NonInvertibleError& e) {
        // a zero divisor in Q[x]/(f) proves f reducible: hypothesis failure
        superend::logging::error(e.what());
        return kExitHypothesis;
    } catch (const std::exception& e) {
        superend::logging::error(e.what());
        return kExitInternal;
    }
    return kExitUsage;
}

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception& e) {
        superend::logging::error(e.what());
        return kExitInternal;
    } catch (...) {
        return kExitInternal;
    }
}
