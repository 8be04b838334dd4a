#ifndef SUPEREND_SWEEP_HPP
#define SUPEREND_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "superend/curve.hpp"

namespace superend {

enum class SweepKind { Rigidity, Spectrum, ClassGroup };

struct SweepOptions {
    long long n_max = 0;
    std::uint64_t q_max = 0;
    int jobs = 1;
};

struct SweepFailure {
    long long n = 0;
    std::uint64_t q = 0;
    std::string detail;
};

struct SweepSummary {
    SweepKind kind{};
    long long shapes_checked = 0;
    std::vector<SweepFailure> failures;  // deterministic (n, q) order
};

// All prime powers q = p^r <= q_max, ascending.
std::vector<PrimePower> prime_powers_up_to(std::uint64_t q_max);

// Coprime shapes with n_min <= n <= n_max, q <= q_max, p not dividing n,
// ordered by (n, q).
std::vector<CurveShape> coprime_shapes(long long n_min, long long n_max, std::uint64_t q_max);

// Per-shape verification fanned out over `jobs` threads; results merged in
// deterministic shape order regardless of schedule. Minimum n depends on
// the kind (4 for rigidity, 2 otherwise).
SweepSummary run_sweep(SweepKind kind, const SweepOptions& opt);

// Concatenated serialized endo descriptors for every coprime shape with
// n >= 5 in the sweep range; used to pin byte-stability across runs and
// across --jobs settings.
std::string endo_sweep_digest(const SweepOptions& opt);

std::string to_string(SweepKind kind);

}  // namespace superend

#endif
