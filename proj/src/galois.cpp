#include "superend/galois.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "superend/primality.hpp"

namespace superend {

int CycleType::sum() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

std::string to_string(CertLevel level) {
    switch (level) {
        case CertLevel::CertifiedSn: return "CertifiedSn";
        case CertLevel::CertifiedAn: return "CertifiedAn";
        case CertLevel::SubsetAnOnly: return "SubsetAnOnly";
        case CertLevel::IrreducibleOnly: return "IrreducibleOnly";
        case CertLevel::Inconclusive: return "Inconclusive";
        case CertLevel::Reducible: return "Reducible";
    }
    return "?";
}

CycleType reduce_and_cycle_type(const UniPoly& f, std::uint64_t p) {
    if (f.degree() < 1) throw DomainError("cycle type requires degree >= 1");
    if (!has_integer_coeffs(f)) throw DomainError("cycle type requires integer coefficients");
    if (mod_u64(numerator(f.lc()), p) == 0)
        throw BadPrimeError("p divides the leading coefficient");
    const Rat d = discriminant(f);
    if (d == 0) throw DomainError("polynomial is not separable");
    if (mod_u64(numerator(d), p) == 0)
        throw BadPrimeError("p divides the discriminant numerator");
    CycleType t;
    for (auto [deg, count] : distinct_degree_factor_degrees(ModPoly::reduce(f, p)))
        for (std::uint64_t k = 0; k < count; ++k) t.parts.push_back(static_cast<int>(deg));
    std::sort(t.parts.rbegin(), t.parts.rend());
    return t;
}

namespace {

std::vector<Int> divisors_of(const Int& value) {
    std::vector<Int> divs;
    Int v = abs(value);
    if (v == 0) return divs;
    // trial division; past this bound root search is skipped (certificates
    // stay one-sided without it)
    if (v > Int("1000000000000")) return divs;
    for (Int d(1); d * d <= v; ++d) {
        if (v % d == 0) {
            divs.push_back(d);
            if (d * d != v) divs.push_back(v / d);
        }
    }
    return divs;
}

// All rational roots of an integer-coefficient polynomial, by the
// root-candidate test p/q with p | constant term, q | leading coefficient.
std::vector<Rat> rational_roots(const UniPoly& f) {
    std::vector<Rat> roots;
    // strip trailing zero coefficients: x | f means root 0
    std::size_t val = 0;
    while (val < f.coeffs().size() && f.coeffs()[val] == 0) ++val;
    if (val > 0) roots.emplace_back(0);
    std::vector<Rat> c(f.coeffs().begin() + static_cast<long>(val), f.coeffs().end());
    UniPoly g(Rationals{}, c);
    if (g.degree() < 1) return roots;
    for (const Int& num : divisors_of(numerator(g.coeff(0))))
        for (const Int& den : divisors_of(numerator(g.lc()))) {
            for (int sign : {1, -1}) {
                Rat cand = make_rat(sign * num, den);
                if (g.eval(cand) == 0) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::uint64_t next_prime_u64(std::uint64_t p) {
    ++p;
    while (!is_prime_u64(p)) ++p;
    return p;
}

bool is_small_prime(int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool is_transposition_type(const CycleType& t) {
    int twos = 0;
    for (int v : t.parts) {
        if (v == 2) ++twos;
        else if (v != 1) return false;
    }
    return twos == 1;
}

bool is_long_prime_cycle_type(const CycleType& t, int n) {
    int big = 0, bigval = 0;
    for (int v : t.parts) {
        if (v > 1) {
            ++big;
            bigval = v;
        }
    }
    return big == 1 && is_small_prime(bigval) && 2 * bigval > n;
}

// Cycle-type sets of the maximal transitive proper subgroups of A_n for
// n <= 7 (identity included). Observed data contained in one of these sets
// cannot separate the group from that subgroup.
std::vector<std::set<CycleType>> proper_transitive_an_subgroup_types(int n) {
    auto T = [](std::vector<std::vector<int>> parts) {
        std::set<CycleType> s;
        for (auto& p : parts) s.insert(CycleType{std::move(p)});
        return s;
    };
    switch (n) {
        case 3:
            return {};  // A_3 = C_3 has no proper transitive subgroup
        case 4:
            // V_4 regular
            return {T({{1, 1, 1, 1}, {2, 2}})};
        case 5:
            // D_5 (covers C_5)
            return {T({{1, 1, 1, 1, 1}, {2, 2, 1}, {5}})};
        case 6:
            // PSL(2,5), the even-wreath S_4, and 3^2:4 (covers the rest)
            return {
                T({{1, 1, 1, 1, 1, 1}, {2, 2, 1, 1}, {3, 3}, {5, 1}}),
                T({{1, 1, 1, 1, 1, 1}, {2, 2, 1, 1}, {3, 3}, {4, 2}}),
                T({{1, 1, 1, 1, 1, 1}, {2, 2, 1, 1}, {3, 1, 1, 1}, {3, 3}, {4, 2}}),
            };
        case 7:
            // PSL(2,7) (covers C_7 and F_21) and D_7
            return {
                T({{1, 1, 1, 1, 1, 1, 1}, {2, 2, 1, 1, 1}, {3, 3, 1}, {4, 2, 1}, {7}}),
                T({{1, 1, 1, 1, 1, 1, 1}, {2, 2, 2, 1}, {7}}),
            };
        default:
            throw DomainError("A_n fingerprint table only covers n <= 7");
    }
}

bool an_fingerprint_unique(const std::vector<CycleType>& observed, int n) {
    if (n < 3 || n > 7) return false;
    for (const auto& sub : proper_transitive_an_subgroup_types(n)) {
        bool contained = true;
        for (const auto& t : observed)
            if (!sub.count(t)) {
                contained = false;
                break;
            }
        if (contained) return false;  // a proper subgroup explains all data
    }
    return true;
}

}  // namespace

bool types_force_irreducibility(const std::vector<CycleType>& types, int n) {
    if (types.empty()) return false;
    for (int k = 1; k < n; ++k) {
        bool some_type_excludes_k = false;
        for (const auto& t : types) {
            // subset-sum over the parts
            std::vector<char> reach(static_cast<std::size_t>(k) + 1, 0);
            reach[0] = 1;
            for (int part : t.parts)
                for (int s = k; s >= part; --s)
                    if (reach[static_cast<std::size_t>(s - part)]) reach[static_cast<std::size_t>(s)] = 1;
            if (!reach[static_cast<std::size_t>(k)]) {
                some_type_excludes_k = true;
                break;
            }
        }
        if (!some_type_excludes_k) return false;
    }
    return true;
}

IrreducibilityEvidence irreducibility_evidence(const UniPoly& f, int prime_budget) {
    if (f.degree() < 1) throw DomainError("irreducibility evidence requires degree >= 1");
    if (!has_integer_coeffs(f)) throw DomainError("integer coefficients required");
    if (discriminant(f) == 0) throw DomainError("polynomial must be squarefree over Q");
    const int n = static_cast<int>(f.degree());

    IrreducibilityEvidence ev;
    const auto roots = rational_roots(f);
    if (!roots.empty() && n > 1) {
        ev.kind = IrreducibilityEvidence::Kind::ReducibleWitness;
        ev.rational_root = roots.front();
        ev.factor_degrees = {1, n - 1};
        return ev;
    }

    std::uint64_t p = 1;
    for (int used = 0; used < prime_budget;) {
        p = next_prime_u64(p);
        CycleType t;
        try {
            t = reduce_and_cycle_type(f, p);
        } catch (const BadPrimeError&) {
            continue;
        }
        ++used;
        if (t.parts.size() == 1 && t.parts[0] == n) {
            ev.kind = IrreducibilityEvidence::Kind::IrreducibleCertified;
            ev.certifying_prime = p;
            return ev;
        }
    }
    ev.kind = IrreducibilityEvidence::Kind::Unknown;
    return ev;
}

bool discriminant_square_test(const UniPoly& f) {
    const Rat d = discriminant(f);
    if (d == 0) throw DomainError("discriminant square test requires nonzero discriminant");
    return is_square(d);
}

GaloisCertificate certify(const UniPoly& f, int prime_budget) {
    if (f.degree() < 2) throw DomainError("certify requires degree >= 2");
    if (!has_integer_coeffs(f)) throw DomainError("certify requires integer coefficients");

    GaloisCertificate cert;
    cert.poly = f;
    cert.n = static_cast<int>(f.degree());
    cert.disc = discriminant(f);
    if (cert.disc == 0) throw DomainError("certify requires squarefree input");
    cert.disc_is_square = is_square(cert.disc);

    const auto roots = rational_roots(f);
    if (!roots.empty()) {
        cert.level = CertLevel::Reducible;
        cert.rational_root = roots.front();
        return cert;
    }

    std::uint64_t p = 1;
    for (int used = 0; used < prime_budget;) {
        p = next_prime_u64(p);
        CycleType t;
        try {
            t = reduce_and_cycle_type(f, p);
        } catch (const BadPrimeError&) {
            continue;
        }
        ++used;
        if (!cert.irreducibility_witness && t.parts.size() == 1) cert.irreducibility_witness = p;
        cert.witness_primes.emplace(p, std::move(t));
    }

    std::vector<CycleType> observed;
    observed.reserve(cert.witness_primes.size());
    for (const auto& [prime, t] : cert.witness_primes) observed.push_back(t);

    cert.transitivity_certified =
        cert.irreducibility_witness.has_value() || types_force_irreducibility(observed, cert.n);

    if (!cert.transitivity_certified) {
        cert.level = cert.disc_is_square ? CertLevel::SubsetAnOnly : CertLevel::Inconclusive;
        return cert;
    }

    if (cert.disc_is_square) {
        const bool unique =
            cert.n >= 3 && cert.n <= 7 && an_fingerprint_unique(observed, cert.n);
        cert.level = unique ? CertLevel::CertifiedAn : CertLevel::SubsetAnOnly;
        return cert;
    }

    bool transposition = false, long_prime = false;
    for (const auto& t : observed) {
        transposition = transposition || is_transposition_type(t);
        long_prime = long_prime || is_long_prime_cycle_type(t, cert.n);
    }
    cert.level = (transposition && long_prime) ? CertLevel::CertifiedSn : CertLevel::IrreducibleOnly;
    return cert;
}

}  // namespace superend
