#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace relaysim {

/// Closed-form lower bound on the probability that no stage of an n-wide,
/// m-city chain is compromised when each node is honest with probability t:
/// [1 - (1 - t^2)^n]^(m-1). Equals 1 for m = 1 (no stages).
double bound_ps(int n, int m, double t);

/// Exact probability that the Bernoulli(1-t) adversary gets no cut, by a
/// transfer-matrix dynamic program over per-city dishonest subsets. The
/// stages share cities, so their compromise events are correlated and this
/// genuinely exceeds the closed-form bound for m > 2. Requires n <= 12.
double exact_secure_prob(int n, int m, double t);

enum class CompromiseModel {
    Bernoulli,
    FixedFraction,
};

CompromiseModel parse_compromise_model(const std::string& name);
const char* compromise_model_name(CompromiseModel model);

struct MonteCarloResult {
    double estimate = 0.0;
    double half_width_99 = 0.0;  // normal-approximation 99% half-interval
    std::uint64_t trials = 0;
    std::uint64_t secure_count = 0;
};

/// Fraction of sampled compromise patterns with no cut. Per-trial seeds are
/// mix64(seed + trial_index), so serial and parallel execution give
/// bit-identical results for any thread count.
MonteCarloResult monte_carlo_secure_prob(int n, int m, double t, std::uint64_t trials,
                                         std::uint64_t seed,
                                         CompromiseModel model = CompromiseModel::Bernoulli,
                                         int threads = 1);

/// Smallest n with bound_ps(n, m, t) >= p_s. Starts from the closed-form
/// log(1 - p_s^(1/(m-1))) / log(1 - t^2) and adjusts by direct evaluation,
/// since the floating-point ratio can land on either side of an integer.
int required_n(double p_s, int m, double t);

/// Small-delta approximation (log(m-1) - log(delta)) / (-log(1 - t^2)) for
/// the n needed to keep the compromise probability below delta.
double approx_n(double delta, int m, double t);

/// Against an adversary that picks k-1 nodes of its choice: secure iff
/// k <= n, because the cheapest cut uses n nodes (one full city).
bool chosen_k_secure(int n, int k);

/// Corrupt-share tolerance of the proactive-VSS variant: n/4 - 1, rounded up
/// and floored at zero.
int pvss_dos_tolerance(int n);

/// Honesty threshold sqrt(3)/2 below which that tolerance gives no real DOS
/// protection.
double pvss_threshold();

/// Per-run traffic: n*(m+1)*ell long-distance bits and m*n*(n-1)*ell
/// intracity bits, plus the all-pairs scaling figure m^2*n^2*ell/2 (every
/// party running the protocol with a partner m/2 cities away).
struct BandwidthModel {
    std::uint64_t intercity_bits = 0;
    std::uint64_t intracity_bits = 0;
    double all_pairs_intercity = 0.0;
};

BandwidthModel bandwidth_model(int n, int m, int ell);

struct SecurityParams {
    int n = 0;
    int m = 0;
    double t = 0.0;
    std::optional<double> p_s;  // target secure probability, when dimensioning

    std::optional<double> delta() const;
};

/// One analysis row: the bound, optionally the exact DP value (skipped when
/// n is beyond the DP's reach), optionally a Monte Carlo estimate. For m = 1
/// the bound is vacuously 1 while the exact value still accounts for a fully
/// dishonest single city, so rows carry a caveat marker there.
struct SecurityReport {
    SecurityParams params;
    double bound = 0.0;
    std::optional<double> exact;
    std::optional<MonteCarloResult> mc;
    bool m1_caveat = false;
    bool exact_skipped = false;  // grid beyond the DP's reach (or non-Bernoulli model)

    /// Semicolon-joined caveat flags for the CSV column: "m1" and/or
    /// "exact-skipped"; empty when the row needs no qualification.
    std::string caveats() const;

    static std::string csv_header();
    std::string csv_row() const;
    std::string to_json() const;
};

/// Largest n exact_secure_prob accepts (2^n DP states).
inline constexpr int kMaxExactN = 12;

/// Bound, exact value when n <= kMaxExactN, and a Monte Carlo estimate when
/// trials > 0.
SecurityReport analyze_security(int n, int m, double t, std::uint64_t mc_trials,
                                std::uint64_t seed,
                                CompromiseModel model = CompromiseModel::Bernoulli,
                                int threads = 1);

}  // namespace relaysim
