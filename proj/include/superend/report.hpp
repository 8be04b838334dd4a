#ifndef SUPEREND_REPORT_HPP
#define SUPEREND_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "superend/curve.hpp"
#include "superend/divisor.hpp"
#include "superend/endopredict.hpp"
#include "superend/galois.hpp"
#include "superend/numberfield.hpp"
#include "superend/rigidity.hpp"

namespace superend {

inline constexpr const char* kReportSchema = "report.schema.v1";

// Reduction section of a report (divisible case only): coefficients of h1
// over K1 rendered as polynomials in the generator.
struct ReductionReport {
    long long new_degree = 0;
    bool h1_separable = false;
    std::vector<std::string> h1_coeffs_desc;
    std::string galois_note;
};

// Everything the single-curve pipeline produces. Sections that do not apply
// to the input shape stay empty; the JSON rendering keeps their keys with
// null values so output shape is stable for diff-based comparison.
struct ReportDocument {
    std::vector<std::string> poly_desc;  // input echo, highest degree first
    std::uint64_t q = 0, p = 0, r = 0;
    long long n = 0;
    std::string shape_case;  // "coprime" | "divisible"

    long long genus_value = 0;
    std::optional<long long> lattice_point_count;
    std::optional<std::vector<long long>> multiplicities;
    std::optional<long long> primitive_mass_value;
    std::optional<RigidityVerdict> rigidity;
    std::optional<std::string> rigidity_note;  // set when n < 4
    std::optional<GaloisCertificate> galois;
    std::optional<std::vector<std::string>> class_group_divisors;
    std::optional<std::string> class_group_order;
    std::optional<ReductionReport> reduction;
    std::optional<std::string> reduction_note;
    std::optional<EndoDescriptor> endo;
    std::optional<std::string> prediction_refused;  // reason; implies exit 2

    double timing_ms = 0.0;
};

// Runs the full pipeline. Throws DomainError for inputs outside the
// hypotheses (non-separable f, inadmissible shape, ...).
ReportDocument build_report(const UniPoly& f, const PrimePower& pp, int prime_budget);

nlohmann::ordered_json report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::ordered_json& j);
std::string report_to_text(const ReportDocument& doc);

nlohmann::ordered_json endo_to_json(const EndoDescriptor& d);
nlohmann::ordered_json galois_to_json(const GaloisCertificate& c);

}  // namespace superend

#endif
