#include "superend/report.hpp"

#include <chrono>
#include <sstream>

#include "superend/log.hpp"

namespace superend {

using nlohmann::ordered_json;

ReportDocument build_report(const UniPoly& f, const PrimePower& pp, int prime_budget) {
    const auto t0 = std::chrono::steady_clock::now();

    if (f.degree() < 1) throw DomainError("polynomial must be nonconstant");
    if (!has_integer_coeffs(f)) throw DomainError("polynomial must have integer coefficients");
    if (discriminant(f) == 0) throw DomainError("polynomial is not separable");

    ReportDocument doc;
    for (long i = f.degree(); i >= 0; --i)
        doc.poly_desc.push_back(to_string(numerator(f.coeff(static_cast<std::size_t>(i)))));
    doc.q = pp.q;
    doc.p = pp.p;
    doc.r = pp.r;
    doc.n = f.degree();

    const CurveShape shape = CurveShape::make(doc.n, pp);  // throws when inadmissible
    doc.shape_case = shape.coprime() ? "coprime" : "divisible";
    doc.genus_value = genus(shape);

    if (shape.coprime()) {
        doc.lattice_point_count = static_cast<long long>(interior_lattice_points(shape).size());
        doc.multiplicities = multiplicity_table(shape).m;
        doc.primitive_mass_value = primitive_mass(shape);
        if (shape.n >= 4) {
            doc.rigidity = rigidity_check(shape);
        } else {
            doc.rigidity_note = "rigidity check requires n >= 4";
        }
        const auto cg = class_group(shape);
        std::vector<std::string> divs;
        for (const auto& d : cg.elementary_divisors) divs.push_back(to_string(d));
        doc.class_group_divisors = std::move(divs);
        doc.class_group_order = to_string(cg.order());
    } else {
        if (f.is_monic()) {
            const auto red = degree_reduction(f, pp);
            ReductionReport rr;
            rr.new_degree = red.new_degree;
            rr.h1_separable = red.h1_separable;
            for (long i = red.h1.degree(); i >= 0; --i)
                rr.h1_coeffs_desc.push_back(
                    red.field.to_string(red.h1.coeff(static_cast<std::size_t>(i))));
            rr.galois_note = red.galois_note;
            doc.reduction = std::move(rr);
        } else {
            doc.reduction_note = "degree reduction requires monic f";
        }
    }

    doc.galois = certify(f, prime_budget);

    if (doc.n >= 5) {
        doc.endo = predict(shape, *doc.galois);
    } else {
        doc.prediction_refused = "degree n < 5 is outside the theorem hypotheses";
    }

    const auto t1 = std::chrono::steady_clock::now();
    doc.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return doc;
}

ordered_json galois_to_json(const GaloisCertificate& c) {
    ordered_json j;
    j["level"] = to_string(c.level);
    j["n"] = c.n;
    j["discriminant"] = to_string(c.disc);
    j["disc_is_square"] = c.disc_is_square;
    j["transitivity_certified"] = c.transitivity_certified;
    ordered_json wp = ordered_json::array();
    for (const auto& [p, t] : c.witness_primes) {
        ordered_json e;
        e["p"] = p;
        e["cycle_type"] = t.parts;
        wp.push_back(std::move(e));
    }
    j["witness_primes"] = std::move(wp);
    j["irreducibility_witness"] =
        c.irreducibility_witness ? ordered_json(*c.irreducibility_witness) : ordered_json(nullptr);
    j["rational_root"] =
        c.rational_root ? ordered_json(to_string(*c.rational_root)) : ordered_json(nullptr);
    return j;
}

namespace {

GaloisCertificate galois_from_json(const ordered_json& j) {
    GaloisCertificate c;
    const std::string lvl = j.at("level").get<std::string>();
    for (CertLevel l : {CertLevel::CertifiedSn, CertLevel::CertifiedAn, CertLevel::SubsetAnOnly,
                        CertLevel::IrreducibleOnly, CertLevel::Inconclusive, CertLevel::Reducible})
        if (to_string(l) == lvl) c.level = l;
    c.n = j.at("n").get<int>();
    c.disc = Rat(j.at("discriminant").get<std::string>());
    c.disc_is_square = j.at("disc_is_square").get<bool>();
    c.transitivity_certified = j.at("transitivity_certified").get<bool>();
    for (const auto& e : j.at("witness_primes")) {
        CycleType t;
        t.parts = e.at("cycle_type").get<std::vector<int>>();
        c.witness_primes.emplace(e.at("p").get<std::uint64_t>(), std::move(t));
    }
    if (!j.at("irreducibility_witness").is_null())
        c.irreducibility_witness = j.at("irreducibility_witness").get<std::uint64_t>();
    if (!j.at("rational_root").is_null())
        c.rational_root = Rat(j.at("rational_root").get<std::string>());
    return c;
}

ordered_json rigidity_to_json(const RigidityVerdict& v) {
    ordered_json j;
    j["rigid"] = v.rigid;
    j["counterexample"] =
        v.counterexample ? ordered_json(*v.counterexample) : ordered_json(nullptr);
    j["failing_index"] =
        v.failing_index ? ordered_json(*v.failing_index) : ordered_json(nullptr);
    j["set_A"] = v.set_a;
    return j;
}

}  // namespace

ordered_json endo_to_json(const EndoDescriptor& d) {
    ordered_json j;
    j["hypothesis_level"] = to_string(d.hypothesis_level);
    j["conditional"] = d.conditional;
    j["nq55_caveat"] = d.nq55_caveat;
    ordered_json fs = ordered_json::array();
    for (const auto& f : d.factors) {
        ordered_json e;
        e["i"] = f.i;
        e["conductor"] = f.conductor;
        e["field"] = f.conductor > 2 ? "Q(zeta_" + std::to_string(f.conductor) + ")" : "Q";
        e["degree"] = f.degree;
        e["component_dimension"] = f.component_dimension;
        e["cm_field"] = f.cm_field;
        e["real_subfield_degree"] = f.real_subfield_degree;
        fs.push_back(std::move(e));
    }
    j["factors"] = std::move(fs);
    j["total_algebra_dimension"] = d.total_algebra_dimension;
    j["jacobian_dimension"] = d.jacobian_dimension;
    j["reduced_degree"] =
        d.reduced_degree ? ordered_json(*d.reduced_degree) : ordered_json(nullptr);
    return j;
}

ordered_json report_to_json(const ReportDocument& doc) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["input"] = {{"poly", doc.poly_desc}, {"q", doc.q}, {"p", doc.p}, {"r", doc.r}, {"n", doc.n}};
    j["shape_case"] = doc.shape_case;
    j["genus"] = doc.genus_value;
    j["lattice_point_count"] =
        doc.lattice_point_count ? ordered_json(*doc.lattice_point_count) : ordered_json(nullptr);
    j["multiplicities"] =
        doc.multiplicities ? ordered_json(*doc.multiplicities) : ordered_json(nullptr);
    j["primitive_mass"] =
        doc.primitive_mass_value ? ordered_json(*doc.primitive_mass_value) : ordered_json(nullptr);
    j["rigidity"] = doc.rigidity ? rigidity_to_json(*doc.rigidity) : ordered_json(nullptr);
    j["rigidity_note"] =
        doc.rigidity_note ? ordered_json(*doc.rigidity_note) : ordered_json(nullptr);
    j["galois"] = doc.galois ? galois_to_json(*doc.galois) : ordered_json(nullptr);
    if (doc.class_group_divisors) {
        j["class_group"] = {{"elementary_divisors", *doc.class_group_divisors},
                            {"order", *doc.class_group_order}};
    } else {
        j["class_group"] = nullptr;
    }
    if (doc.reduction) {
        j["reduction"] = {{"new_degree", doc.reduction->new_degree},
                          {"h1_separable", doc.reduction->h1_separable},
                          {"h1_coeffs", doc.reduction->h1_coeffs_desc},
                          {"galois_note", doc.reduction->galois_note}};
    } else {
        j["reduction"] = nullptr;
    }
    j["reduction_note"] =
        doc.reduction_note ? ordered_json(*doc.reduction_note) : ordered_json(nullptr);
    j["endo"] = doc.endo ? endo_to_json(*doc.endo) : ordered_json(nullptr);
    j["prediction_refused"] =
        doc.prediction_refused ? ordered_json(*doc.prediction_refused) : ordered_json(nullptr);
    j["timing_ms"] = doc.timing_ms;
    return j;
}

ReportDocument report_from_json(const ordered_json& j) {
    ReportDocument doc;
    doc.poly_desc = j.at("input").at("poly").get<std::vector<std::string>>();
    doc.q = j.at("input").at("q").get<std::uint64_t>();
    doc.p = j.at("input").at("p").get<std::uint64_t>();
    doc.r = j.at("input").at("r").get<std::uint64_t>();
    doc.n = j.at("input").at("n").get<long long>();
    doc.shape_case = j.at("shape_case").get<std::string>();
    doc.genus_value = j.at("genus").get<long long>();
    if (!j.at("lattice_point_count").is_null())
        doc.lattice_point_count = j.at("lattice_point_count").get<long long>();
    if (!j.at("multiplicities").is_null())
        doc.multiplicities = j.at("multiplicities").get<std::vector<long long>>();
    if (!j.at("primitive_mass").is_null())
        doc.primitive_mass_value = j.at("primitive_mass").get<long long>();
    if (!j.at("rigidity").is_null()) {
        const auto& rj = j.at("rigidity");
        RigidityVerdict v;
        v.shape = CurveShape::make(doc.n, PrimePower::make(doc.p, doc.r));
        v.rigid = rj.at("rigid").get<bool>();
        if (!rj.at("counterexample").is_null())
            v.counterexample = rj.at("counterexample").get<std::uint64_t>();
        if (!rj.at("failing_index").is_null())
            v.failing_index = rj.at("failing_index").get<std::uint64_t>();
        v.set_a = rj.at("set_A").get<std::vector<std::uint64_t>>();
        doc.rigidity = std::move(v);
    }
    if (!j.at("rigidity_note").is_null())
        doc.rigidity_note = j.at("rigidity_note").get<std::string>();
    if (!j.at("galois").is_null()) doc.galois = galois_from_json(j.at("galois"));
    if (!j.at("class_group").is_null()) {
        doc.class_group_divisors =
            j.at("class_group").at("elementary_divisors").get<std::vector<std::string>>();
        doc.class_group_order = j.at("class_group").at("order").get<std::string>();
    }
    if (!j.at("reduction").is_null()) {
        const auto& rj = j.at("reduction");
        ReductionReport rr;
        rr.new_degree = rj.at("new_degree").get<long long>();
        rr.h1_separable = rj.at("h1_separable").get<bool>();
        rr.h1_coeffs_desc = rj.at("h1_coeffs").get<std::vector<std::string>>();
        rr.galois_note = rj.at("galois_note").get<std::string>();
        doc.reduction = std::move(rr);
    }
    if (!j.at("reduction_note").is_null())
        doc.reduction_note = j.at("reduction_note").get<std::string>();
    if (!j.at("endo").is_null()) {
        const auto& ej = j.at("endo");
        EndoDescriptor d;
        d.shape = CurveShape::make(doc.n, PrimePower::make(doc.p, doc.r));
        const std::string lvl = ej.at("hypothesis_level").get<std::string>();
        for (CertLevel l :
             {CertLevel::CertifiedSn, CertLevel::CertifiedAn, CertLevel::SubsetAnOnly,
              CertLevel::IrreducibleOnly, CertLevel::Inconclusive, CertLevel::Reducible})
            if (to_string(l) == lvl) d.hypothesis_level = l;
        d.conditional = ej.at("conditional").get<bool>();
        d.nq55_caveat = ej.at("nq55_caveat").get<bool>();
        for (const auto& fe : ej.at("factors")) {
            EndoFactor f;
            f.i = fe.at("i").get<int>();
            f.conductor = fe.at("conductor").get<std::uint64_t>();
            f.degree = fe.at("degree").get<long long>();
            f.component_dimension = fe.at("component_dimension").get<long long>();
            f.cm_field = fe.at("cm_field").get<bool>();
            f.real_subfield_degree = fe.at("real_subfield_degree").get<long long>();
            d.factors.push_back(f);
        }
        d.total_algebra_dimension = ej.at("total_algebra_dimension").get<long long>();
        d.jacobian_dimension = ej.at("jacobian_dimension").get<long long>();
        if (!ej.at("reduced_degree").is_null())
            d.reduced_degree = ej.at("reduced_degree").get<long long>();
        doc.endo = std::move(d);
    }
    if (!j.at("prediction_refused").is_null())
        doc.prediction_refused = j.at("prediction_refused").get<std::string>();
    doc.timing_ms = j.at("timing_ms").get<double>();
    return doc;
}

std::string report_to_text(const ReportDocument& doc) {
    std::ostringstream os;
    os << "curve y^" << doc.q << " = f(x), deg f = " << doc.n << " (" << doc.shape_case
       << " case, p = " << doc.p << ", r = " << doc.r << ")\n";
    os << "f coefficients (desc): ";
    for (std::size_t i = 0; i < doc.poly_desc.size(); ++i)
        os << (i ? "," : "") << doc.poly_desc[i];
    os << "\n";
    os << "genus: " << doc.genus_value << "\n";
    if (doc.lattice_point_count)
        os << "interior lattice points: " << *doc.lattice_point_count << "\n";
    if (doc.multiplicities) {
        os << "multiplicities m_i (i=1.." << doc.q - 1 << "):";
        for (long long m : *doc.multiplicities) os << " " << m;
        os << "\n";
    }
    if (doc.primitive_mass_value) os << "primitive mass: " << *doc.primitive_mass_value << "\n";
    if (doc.rigidity) {
        os << "rigidity: " << (doc.rigidity->rigid ? "rigid" : "NOT RIGID");
        if (doc.rigidity->counterexample)
            os << " (preserving multiplier m = " << *doc.rigidity->counterexample << ")";
        os << "\n";
        os << "set A: {";
        for (std::size_t i = 0; i < doc.rigidity->set_a.size(); ++i)
            os << (i ? "," : "") << doc.rigidity->set_a[i];
        os << "}\n";
    }
    if (doc.rigidity_note) os << "rigidity: " << *doc.rigidity_note << "\n";
    if (doc.galois) {
        os << "galois: " << to_string(doc.galois->level) << ", disc = "
           << to_string(doc.galois->disc)
           << (doc.galois->disc_is_square ? " (square)" : " (not a square)") << "\n";
    }
    if (doc.class_group_divisors) {
        os << "class group invariants: (";
        for (std::size_t i = 0; i < doc.class_group_divisors->size(); ++i)
            os << (i ? "," : "") << (*doc.class_group_divisors)[i];
        os << "), order " << *doc.class_group_order << "\n";
    }
    if (doc.reduction) {
        os << "reduction: h1 degree " << doc.reduction->new_degree
           << (doc.reduction->h1_separable ? ", separable" : ", NOT separable") << "\n";
        os << "h1 coefficients over K1 (desc): ";
        for (std::size_t i = 0; i < doc.reduction->h1_coeffs_desc.size(); ++i)
            os << (i ? "; " : "") << doc.reduction->h1_coeffs_desc[i];
        os << "\n";
        os << "note: " << doc.reduction->galois_note << "\n";
    }
    if (doc.reduction_note) os << "reduction: " << *doc.reduction_note << "\n";
    if (doc.endo) {
        os << "endomorphism algebra" << (doc.endo->conditional ? " (CONDITIONAL)" : "") << ": ";
        for (std::size_t i = 0; i < doc.endo->factors.size(); ++i) {
            const auto& f = doc.endo->factors[i];
            os << (i ? " x " : "")
               << (f.conductor > 2 ? "Q(zeta_" + std::to_string(f.conductor) + ")" : "Q");
        }
        os << "\n";
        for (const auto& f : doc.endo->factors)
            os << "  component i=" << f.i << ": conductor " << f.conductor << ", degree "
               << f.degree << ", dim " << f.component_dimension << "\n";
        os << "  total algebra dimension: " << doc.endo->total_algebra_dimension
           << ", jacobian dimension: " << doc.endo->jacobian_dimension << "\n";
        if (doc.endo->nq55_caveat)
            os << "  caveat: (n, q) = (5, 5) is excluded in part of the source analysis\n";
    }
    if (doc.prediction_refused) os << "prediction refused: " << *doc.prediction_refused << "\n";
    os << "timing_ms: " << doc.timing_ms << "\n";
    return os.str();
}

}  // namespace superend
