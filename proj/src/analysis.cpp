#include "relaysim/analysis.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "relaysim/rng.hpp"
#include "relaysim/topology.hpp"

#include "json.hpp"

namespace relaysim {

namespace {

constexpr double kZ99 = 2.5758293035489004;  // two-sided 99% normal quantile

void check_dims(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("network dimensions must be positive");
}

void check_probability(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("t must lie in [0,1]");
}

}  // namespace

double bound_ps(int n, int m, double t) {
    check_dims(n, m);
    check_probability(t);
    if (m == 1) return 1.0;  // empty product over stages
    const double stage_secure = 1.0 - std::pow(1.0 - t * t, n);
    return std::pow(stage_secure, m - 1);
}

double exact_secure_prob(int n, int m, double t) {
    check_dims(n, m);
    check_probability(t);
    if (n > kMaxExactN) throw std::invalid_argument("exact_secure_prob: n too large for the state space");

    if (m == 1) {
        // Only the endpoint layer: compromised iff the single city is fully
        // dishonest.
        return 1.0 - std::pow(1.0 - t, n);
    }

    const std::size_t states = std::size_t{1} << n;
    const std::size_t full = states - 1;

    // Weight of a dishonest subset under the Bernoulli model.
    std::vector<double> weight(states);
    for (std::size_t s = 0; s < states; ++s) {
        const int dishonest = std::popcount(s);
        weight[s] = std::pow(1.0 - t, dishonest) * std::pow(t, n - dishonest);
    }

    // mass[s] = P(city j has subset s and no stage among 1..j-1 is covered).
    // A fully dishonest end city is covered by its adjacent stage, so no
    // extra endpoint term is needed for m >= 2.
    std::vector<double> mass = weight;
    std::vector<double> superset_sum(states);
    std::vector<double> next(states);
    for (int stage = 1; stage < m; ++stage) {
        // superset_sum[u] = sum of mass over subsets containing u
        superset_sum = mass;
        for (int b = 0; b < n; ++b)
            for (std::size_t s = 0; s < states; ++s)
                if (!(s & (std::size_t{1} << b)))
                    superset_sum[s] += superset_sum[s | (std::size_t{1} << b)];
        const double total = superset_sum[0];
        // Stage is covered iff next_subset | s == full, i.e. next_subset
        // contains the complement of s.
        for (std::size_t s = 0; s < states; ++s)
            next[s] = weight[s] * (total - superset_sum[full & ~s]);
        mass.swap(next);
    }

    double secure = 0.0;
    for (const double v : mass) secure += v;
    return secure;
}

CompromiseModel parse_compromise_model(const std::string& name) {
    if (name == "bernoulli") return CompromiseModel::Bernoulli;
    if (name == "fixed-fraction") return CompromiseModel::FixedFraction;
    throw std::invalid_argument("unknown compromise model: " + name);
}

const char* compromise_model_name(CompromiseModel model) {
    return model == CompromiseModel::Bernoulli ? "bernoulli" : "fixed-fraction";
}

MonteCarloResult monte_carlo_secure_prob(int n, int m, double t, std::uint64_t trials,
                                         std::uint64_t seed, CompromiseModel model,
                                         int threads) {
    check_dims(n, m);
    check_probability(t);
    if (trials < 1) throw std::invalid_argument("monte_carlo_secure_prob: trials must be >= 1");
    if (threads < 1) threads = 1;

    const NetworkSpec spec(m, n, 1);
    const auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t secure = 0;
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            const std::uint64_t trial_seed = mix64(seed + trial);
            const CompromisePattern pattern =
                model == CompromiseModel::Bernoulli
                    ? sample_pattern_bernoulli(spec, t, trial_seed)
                    : sample_pattern_fixed_fraction(spec, t, trial_seed);
            if (!has_cut(spec, pattern)) ++secure;
        }
        return secure;
    };

    std::uint64_t secure = 0;
    if (threads == 1 || trials < 2) {
        secure = count_range(0, trials);
    } else {
        const std::uint64_t workers = std::min<std::uint64_t>(threads, trials);
        std::vector<std::uint64_t> partial(workers, 0);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t begin = trials * w / workers;
            const std::uint64_t end = trials * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] { partial[w] = count_range(begin, end); });
        }
        for (auto& th : pool) th.join();
        for (const std::uint64_t c : partial) secure += c;
    }

    MonteCarloResult out;
    out.trials = trials;
    out.secure_count = secure;
    out.estimate = static_cast<double>(secure) / static_cast<double>(trials);
    const double variance = out.estimate * (1.0 - out.estimate) / static_cast<double>(trials);
    out.half_width_99 = kZ99 * std::sqrt(variance > 0.0 ? variance : 0.0);
    return out;
}

int required_n(double p_s, int m, double t) {
    if (!(p_s > 0.0 && p_s < 1.0)) throw std::invalid_argument("required_n: need 0 < p_s < 1");
    if (m < 2) throw std::invalid_argument("required_n: need m >= 2");
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("required_n: need 0 < t < 1");

    const double hint =
        std::log(1.0 - std::pow(p_s, 1.0 / (m - 1))) / std::log(1.0 - t * t);
    int n = 1;
    if (std::isfinite(hint) && hint > 2.0) n = static_cast<int>(hint) - 1;

    while (bound_ps(n, m, t) < p_s) {
        ++n;
        if (n > 100'000'000) throw std::runtime_error("required_n: no feasible n");
    }
    while (n > 1 && bound_ps(n - 1, m, t) >= p_s) --n;
    return n;
}

double approx_n(double delta, int m, double t) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("approx_n: need 0 < delta < 1");
    if (m < 2) throw std::invalid_argument("approx_n: need m >= 2");
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("approx_n: need 0 < t < 1");
    return (std::log(static_cast<double>(m - 1)) - std::log(delta)) /
           (-std::log(1.0 - t * t));
}

bool chosen_k_secure(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("chosen_k_secure: need n, k >= 1");
    return k <= n;
}

int pvss_dos_tolerance(int n) {
    if (n < 1) throw std::invalid_argument("pvss_dos_tolerance: need n >= 1");
    const int tolerance = (n + 3) / 4 - 1;  // ceil(n/4) - 1
    return tolerance > 0 ? tolerance : 0;
}

double pvss_threshold() { return std::sqrt(3.0) / 2.0; }

BandwidthModel bandwidth_model(int n, int m, int ell) {
    check_dims(n, m);
    if (ell < 1) throw std::invalid_argument("bandwidth_model: ell must be positive");
    BandwidthModel out;
    const auto un = static_cast<std::uint64_t>(n);
    const auto um = static_cast<std::uint64_t>(m);
    const auto ue = static_cast<std::uint64_t>(ell);
    out.intercity_bits = un * (um + 1) * ue;
    out.intracity_bits = um * un * (un - 1) * ue;
    out.all_pairs_intercity =
        0.5 * static_cast<double>(um * um) * static_cast<double>(un * un) * static_cast<double>(ue);
    return out;
}

std::optional<double> SecurityParams::delta() const {
    if (!p_s) return std::nullopt;
    return 1.0 - *p_s;
}

namespace {

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

}  // namespace

std::string SecurityReport::caveats() const {
    std::string out;
    if (m1_caveat) out = "m1";
    if (exact_skipped) {
        if (!out.empty()) out += ';';
        out += "exact-skipped";
    }
    return out;
}

std::string SecurityReport::csv_header() {
    return "n,m,t,bound,exact,mc_estimate,mc_half_width,mc_trials,caveat";
}

std::string SecurityReport::csv_row() const {
    std::ostringstream out;
    out << params.n << ',' << params.m << ',' << format_double(params.t) << ','
        << format_double(bound) << ',';
    if (exact) out << format_double(*exact);
    out << ',';
    if (mc) out << format_double(mc->estimate);
    out << ',';
    if (mc) out << format_double(mc->half_width_99);
    out << ',';
    if (mc) out << mc->trials;
    out << ',' << caveats();
    return out.str();
}

std::string SecurityReport::to_json() const {
    nlohmann::json doc;
    doc["params"]["n"] = params.n;
    doc["params"]["m"] = params.m;
    doc["params"]["t"] = params.t;
    if (params.p_s) {
        doc["params"]["p_s"] = *params.p_s;
        doc["params"]["delta"] = *params.delta();
    }
    doc["bound"] = bound;
    doc["exact"] = exact ? nlohmann::json(*exact) : nlohmann::json(nullptr);
    if (mc) {
        doc["mc"]["estimate"] = mc->estimate;
        doc["mc"]["half_width_99"] = mc->half_width_99;
        doc["mc"]["trials"] = mc->trials;
        doc["mc"]["secure_count"] = mc->secure_count;
    } else {
        doc["mc"] = nullptr;
    }
    doc["caveat"] = caveats();
    return doc.dump();
}

SecurityReport analyze_security(int n, int m, double t, std::uint64_t mc_trials,
                                std::uint64_t seed, CompromiseModel model, int threads) {
    SecurityReport report;
    report.params = SecurityParams{.n = n, .m = m, .t = t, .p_s = std::nullopt};
    report.bound = bound_ps(n, m, t);
    report.m1_caveat = (m == 1);
    if (n <= kMaxExactN && model == CompromiseModel::Bernoulli)
        report.exact = exact_secure_prob(n, m, t);
    else
        report.exact_skipped = true;
    if (mc_trials > 0)
        report.mc = monte_carlo_secure_prob(n, m, t, mc_trials, seed, model, threads);
    return report;
}

}  // namespace relaysim
