// Experiment driver for the relay-protocol simulator: seeded protocol and
// verification campaigns, security-bound sweeps and network dimensioning,
// all emitting deterministic CSV (config echoed in '#' header lines).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "relaysim/analysis.hpp"
#include "relaysim/relay.hpp"
#include "relaysim/rng.hpp"
#include "relaysim/topology.hpp"
#include "relaysim/verification.hpp"
#include "relaysim/version.hpp"

namespace {

using nlohmann::json;
using namespace relaysim;

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 1;

/// Invalid configuration (bad value, unknown key, malformed JSON): exit 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Failure while doing the work (unwritable output): exit 1.
struct RunError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

// ---------------------------------------------------------------------------
// Config file handling. Precedence: flag > config > default.
// ---------------------------------------------------------------------------

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in.good()) throw ConfigError("cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    return doc;
}

void check_keys(const json& config, const std::vector<std::string>& allowed) {
    for (const auto& item : config.items()) {
        bool known = false;
        for (const auto& key : allowed)
            if (item.key() == key) {
                known = true;
                break;
            }
        if (!known) throw ConfigError("unknown config key: " + item.key());
    }
}

template <typename T>
T effective(const CLI::Option* flag, const T& flag_value, const json& config,
            const std::string& key, const T& fallback) {
    if (flag != nullptr && flag->count() > 0) return flag_value;
    if (config.contains(key)) {
        try {
            return config.at(key).get<T>();
        } catch (const json::exception&) {
            throw ConfigError("config key '" + key + "' has the wrong type");
        }
    }
    return fallback;
}

/// Comma-separated numeric list; the config side may be a scalar or an array.
template <typename T>
std::vector<T> parse_list(const std::string& text) {
    std::vector<T> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw ConfigError("empty element in list: '" + text + "'");
        try {
            std::size_t used = 0;
            if constexpr (std::is_same_v<T, int>)
                out.push_back(std::stoi(item, &used));
            else
                out.push_back(std::stod(item, &used));
            if (used != item.size()) throw ConfigError("cannot parse list element: '" + item + "'");
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("cannot parse list element: '" + item + "'");
        }
    }
    if (out.empty()) throw ConfigError("empty list: '" + text + "'");
    return out;
}

template <typename T>
std::vector<T> effective_list(const CLI::Option* flag, const std::string& flag_value,
                              const json& config, const std::string& key,
                              const std::vector<T>& fallback) {
    if (flag != nullptr && flag->count() > 0) return parse_list<T>(flag_value);
    if (config.contains(key)) {
        const json& value = config.at(key);
        try {
            if (value.is_array()) return value.get<std::vector<T>>();
            return std::vector<T>{value.get<T>()};
        } catch (const json::exception&) {
            throw ConfigError("config key '" + key + "' has the wrong type");
        }
    }
    return fallback;
}

// ---------------------------------------------------------------------------
// Output plumbing.
// ---------------------------------------------------------------------------

class CsvSink {
public:
    /// Empty path means stdout.
    explicit CsvSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_.good()) throw RunError("cannot open output file: " + path);
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

    void finish() {
        stream().flush();
        if (file_.is_open() && !file_.good()) throw RunError("error writing output file");
    }

private:
    std::ofstream file_;
};

void write_metadata(std::ostream& out, const std::string& command, const json& config,
                    std::uint64_t seed) {
    out << "# relaysim " << kVersion << "\n";
    out << "# command: " << command << "\n";
    out << "# config: " << config.dump() << "\n";
    out << "# seed: " << seed << "\n";
}

/// Chunked parallel map over [0, count): fn(index) -> row. Row order (and so
/// output bytes) is independent of the thread count.
template <typename Fn>
std::vector<std::string> parallel_rows(std::uint64_t count, int threads, Fn fn) {
    std::vector<std::string> rows(count);
    if (threads < 2 || count < 2) {
        for (std::uint64_t k = 0; k < count; ++k) rows[k] = fn(k);
        return rows;
    }
    const std::uint64_t workers = std::min<std::uint64_t>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = count * w / workers;
        const std::uint64_t end = count * (w + 1) / workers;
        pool.emplace_back([&rows, begin, end, &fn] {
            for (std::uint64_t k = begin; k < end; ++k) rows[k] = fn(k);
        });
    }
    for (auto& th : pool) th.join();
    return rows;
}

// ---------------------------------------------------------------------------
// simulate: seeded relay trials with sampled compromise patterns.
// ---------------------------------------------------------------------------

struct SimulateParams {
    int m = 3;
    int n = 2;
    int ell = 64;
    double t = 0.5;
    std::string model = "bernoulli";
    std::string pattern;  // fixed compromise pattern; empty means sample per trial
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out;
};

int cmd_simulate(const SimulateParams& params) {
    if (!(params.t >= 0.0 && params.t <= 1.0)) throw ConfigError("t must lie in [0,1]");
    if (params.trials < 1) throw ConfigError("trials must be >= 1");
    const CompromiseModel model = parse_compromise_model(params.model);
    const NetworkSpec spec(params.m, params.n, params.ell);
    std::optional<CompromisePattern> fixed_pattern;
    if (!params.pattern.empty()) {
        try {
            fixed_pattern = CompromisePattern::from_string(params.pattern, params.m, params.n);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("bad pattern: ") + e.what());
        }
    }

    json config;
    config["m"] = params.m;
    config["n"] = params.n;
    config["ell"] = params.ell;
    config["t"] = params.t;
    config["model"] = params.model;
    if (fixed_pattern) config["pattern"] = params.pattern;
    config["trials"] = params.trials;
    config["seed"] = params.seed;

    const auto row_for = [&](std::uint64_t trial) {
        const std::uint64_t base = mix64(params.seed + trial);
        const std::uint64_t pattern_seed = mix64(base + 1);
        const std::uint64_t run_seed = mix64(base + 2);
        const CompromisePattern pattern =
            fixed_pattern ? *fixed_pattern
            : model == CompromiseModel::Bernoulli
                ? sample_pattern_bernoulli(spec, params.t, pattern_seed)
                : sample_pattern_fixed_fraction(spec, params.t, pattern_seed);
        const RunOutcome run = run_relay(spec, pattern, run_seed);
        const auto key = adversary_reconstruct(extract_view(run, pattern), spec);

        std::ostringstream row;
        row << trial << ',' << pattern.to_string() << ',' << (has_cut(spec, pattern) ? 1 : 0)
            << ',' << (key.has_value() ? 1 : 0) << ',' << (run.s == run.s_prime ? 1 : 0) << ','
            << run.transcript.intercity_bits << ',' << run.transcript.intracity_bits;
        return row.str();
    };

    const std::vector<std::string> rows = parallel_rows(params.trials, params.threads, row_for);

    CsvSink sink(params.out);
    write_metadata(sink.stream(), "simulate", config, params.seed);
    sink.stream() << "trial,pattern,cut,reconstructed,keys_equal,intercity_bits,intracity_bits\n";
    for (const std::string& row : rows) sink.stream() << row << '\n';
    sink.finish();
    return 0;
}

// ---------------------------------------------------------------------------
// verify-demo: verification trials under a configured attack.
// ---------------------------------------------------------------------------

struct VerifyDemoParams {
    int ell_1a = 64;
    int ell_1b = 64;
    int ell_2 = 64;
    int ell_3 = 128;
    std::string hash_family = "default";
    std::uint64_t hash_seed = 0;
    std::string attack = "none";
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out;
};

HashFamily parse_hash_family(const std::string& name) {
    if (name == "default") return HashFamily::DefaultNonlinear;
    if (name == "linear-test") return HashFamily::LinearTest;
    throw ConfigError("unknown hash family: " + name);
}

int cmd_verify_demo(const VerifyDemoParams& params) {
    if (params.ell_1a < 1 || params.ell_1b < 1 || params.ell_2 < 1 || params.ell_3 < 1)
        throw ConfigError("all partition lengths must be >= 1");
    if (params.trials < 1) throw ConfigError("trials must be >= 1");
    const HashFamily family = parse_hash_family(params.hash_family);
    const bool valid_attack = params.attack == "none" || params.attack == "random-e1b" ||
                              params.attack == "linear-forge" || params.attack == "impersonate";
    if (!valid_attack) throw ConfigError("unknown attack: " + params.attack);

    const std::size_t l1a = params.ell_1a, l1b = params.ell_1b, l2 = params.ell_2,
                      l3 = params.ell_3;
    const std::size_t ell = l1a + l1b + l2 + l3;
    const HashSpec hash_spec{family, 64, params.hash_seed};

    json config;
    config["ell_1a"] = params.ell_1a;
    config["ell_1b"] = params.ell_1b;
    config["ell_2"] = params.ell_2;
    config["ell_3"] = params.ell_3;
    config["hash"] = params.hash_family;
    config["hash_seed"] = params.hash_seed;
    config["attack"] = params.attack;
    config["trials"] = params.trials;
    config["seed"] = params.seed;

    const auto random_nonzero = [](std::size_t bits, BitStream& stream) {
        for (;;) {
            BitString value = BitString::random(bits, stream);
            if (!value.is_zero()) return value;
        }
    };

    // One seeded trial; returns (bob_accepts, alice_accepts).
    const auto trial_outcome = [&](std::uint64_t trial) -> std::pair<bool, bool> {
        const std::uint64_t base = mix64(params.seed + trial);
        BitStream key_bits(mix64(base + 1));
        BitStream attack_bits(mix64(base + 2));
        const std::uint64_t nonce_seed = mix64(base + 3);

        const KeyPartition alice = split_key(BitString::random(ell, key_bits), l1a, l1b, l2);

        if (params.attack == "impersonate") {
            // Eve never engages Bob; she answers Alice with a uniform guess.
            BitStream nonce_bits(nonce_seed);
            const BitString nonce = BitString::random(l1a, nonce_bits);
            const BitString guess = BitString::random(l2, attack_bits);
            const BitString nonce_hash = hash(hash_spec.with_output_bits(l2), nonce);
            return {false, attack_impersonate_bob(guess, alice, nonce_hash)};
        }

        TamperString tamper = TamperString::zeros(alice);
        if (params.attack == "random-e1b") {
            tamper.e3 = random_nonzero(l3, attack_bits);
            tamper.e1b = BitString::random(l1b, attack_bits);
        } else if (params.attack == "linear-forge") {
            // Key-independent forgery: bet that H[s3]^H[s3^e3] = H[e3], which
            // the linear family satisfies identically.
            tamper.e3 = random_nonzero(l3, attack_bits);
            tamper.e1b = hash(hash_spec.with_output_bits(l1b), tamper.e3);
        }
        const KeyPartition bob = apply_tamper(alice, tamper);
        const VerificationOutcome out = run_verification(alice, bob, hash_spec, nonce_seed);
        return {out.bob_accepts, out.alice_accepts};
    };

    const auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::pair<std::uint64_t, std::uint64_t> counts{0, 0};
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            const auto [bob, alice] = trial_outcome(trial);
            counts.first += bob;
            counts.second += alice;
        }
        return counts;
    };

    std::uint64_t bob_accepts = 0, alice_accepts = 0;
    if (params.threads < 2 || params.trials < 2) {
        std::tie(bob_accepts, alice_accepts) = count_range(0, params.trials);
    } else {
        const std::uint64_t workers = std::min<std::uint64_t>(params.threads, params.trials);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> partial(workers);
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t begin = params.trials * w / workers;
            const std::uint64_t end = params.trials * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] { partial[w] = count_range(begin, end); });
        }
        for (auto& th : pool) th.join();
        for (const auto& [bob, alice] : partial) {
            bob_accepts += bob;
            alice_accepts += alice;
        }
    }

    CsvSink sink(params.out);
    write_metadata(sink.stream(), "verify-demo", config, params.seed);
    sink.stream()
        << "attack,hash,trials,ell_1a,ell_1b,ell_2,ell_3,bob_accept_rate,alice_accept_rate\n";
    sink.stream() << params.attack << ',' << params.hash_family << ',' << params.trials << ','
                  << params.ell_1a << ',' << params.ell_1b << ',' << params.ell_2 << ','
                  << params.ell_3 << ','
                  << format_double(static_cast<double>(bob_accepts) /
                                   static_cast<double>(params.trials))
                  << ','
                  << format_double(static_cast<double>(alice_accepts) /
                                   static_cast<double>(params.trials))
                  << '\n';
    sink.finish();
    return 0;
}

// ---------------------------------------------------------------------------
// analyze / sweep: bound, exact and Monte Carlo columns over an (n, m, t) grid.
// ---------------------------------------------------------------------------

struct AnalyzeParams {
    std::vector<int> n{2};
    std::vector<int> m{3};
    std::vector<double> t{0.5};
    std::string model = "bernoulli";
    std::uint64_t trials = 0;  // 0: no Monte Carlo columns
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out;
};

int run_grid(const char* command, const AnalyzeParams& params) {
    const CompromiseModel model = parse_compromise_model(params.model);
    for (const int n : params.n)
        if (n < 1) throw ConfigError("n must be >= 1");
    for (const int m : params.m)
        if (m < 1) throw ConfigError("m must be >= 1");
    for (const double t : params.t)
        if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("t must lie in [0,1]");

    json config;
    config["n"] = params.n;
    config["m"] = params.m;
    config["t"] = params.t;
    config["model"] = params.model;
    config["trials"] = params.trials;
    config["seed"] = params.seed;

    CsvSink sink(params.out);
    write_metadata(sink.stream(), command, config, params.seed);
    sink.stream() << SecurityReport::csv_header() << '\n';
    std::uint64_t row_index = 0;
    for (const int n : params.n)
        for (const int m : params.m)
            for (const double t : params.t) {
                const SecurityReport report =
                    analyze_security(n, m, t, params.trials, mix64(params.seed + row_index),
                                     model, params.threads);
                sink.stream() << report.csv_row() << '\n';
                ++row_index;
            }
    sink.finish();
    return 0;
}

// ---------------------------------------------------------------------------
// dimension: required and approximate n per (p_s or delta, m, t) row.
// ---------------------------------------------------------------------------

struct DimensionParams {
    std::vector<double> p_s;  // exactly one of p_s / delta is given
    std::vector<double> delta;
    std::vector<int> m{11};
    std::vector<double> t{0.5};
    std::uint64_t seed = 0;  // no randomness here; echoed for uniform headers
    std::string out;
};

int cmd_dimension(const DimensionParams& params) {
    if (params.p_s.empty() == params.delta.empty())
        throw ConfigError("give exactly one of --ps / --delta");
    std::vector<double> deltas;
    if (!params.delta.empty())
        deltas = params.delta;
    else
        for (const double p : params.p_s) deltas.push_back(1.0 - p);
    for (const double d : deltas)
        if (!(d > 0.0 && d < 1.0)) throw ConfigError("delta must lie in (0,1)");
    for (const int m : params.m)
        if (m < 2) throw ConfigError("dimensioning needs m >= 2");
    for (const double t : params.t)
        if (!(t > 0.0 && t < 1.0)) throw ConfigError("dimensioning needs 0 < t < 1");

    json config;
    if (!params.p_s.empty()) config["ps"] = params.p_s;
    if (!params.delta.empty()) config["delta"] = params.delta;
    config["m"] = params.m;
    config["t"] = params.t;
    config["seed"] = params.seed;

    CsvSink sink(params.out);
    write_metadata(sink.stream(), "dimension", config, params.seed);
    sink.stream() << "p_s,delta,m,t,required_n,approx_n,bound_at_required\n";
    for (const double delta : deltas)
        for (const int m : params.m)
            for (const double t : params.t) {
                const double p_s = 1.0 - delta;
                const int needed = required_n(p_s, m, t);
                sink.stream() << format_double(p_s) << ',' << format_double(delta) << ',' << m
                              << ',' << format_double(t) << ',' << needed << ','
                              << format_double(approx_n(delta, m, t)) << ','
                              << format_double(bound_ps(needed, m, t)) << '\n';
            }
    sink.finish();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relaysim: secret-sharing relay protocol simulator and analyzer"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    int threads = 1;
    std::string out;

    SimulateParams sim;
    CLI::App* simulate = app.add_subcommand("simulate", "run seeded relay trials");
    simulate->add_option("--config", config_path, "JSON config file");
    auto* sim_m = simulate->add_option("--m", sim.m, "cities");
    auto* sim_n = simulate->add_option("--n", sim.n, "nodes per city");
    auto* sim_ell = simulate->add_option("--ell", sim.ell, "share length in bits");
    auto* sim_t = simulate->add_option("--t", sim.t, "per-node honesty probability");
    auto* sim_model = simulate->add_option("--model", sim.model, "bernoulli|fixed-fraction");
    auto* sim_pattern = simulate->add_option(
        "--pattern", sim.pattern, "fixed compromise pattern ('0'/'1' per node, city-major)");
    auto* sim_trials = simulate->add_option("--trials", trials, "trial count");
    auto* sim_seed = simulate->add_option("--seed", seed, "master seed");
    auto* sim_threads = simulate->add_option("--threads", threads, "worker threads");
    auto* sim_out = simulate->add_option("--out", out, "output CSV path (default stdout)");

    VerifyDemoParams ver;
    CLI::App* verify = app.add_subcommand("verify-demo", "run key-verification attack trials");
    verify->add_option("--config", config_path, "JSON config file");
    auto* ver_l1a = verify->add_option("--ell1a", ver.ell_1a, "nonce pad bits");
    auto* ver_l1b = verify->add_option("--ell1b", ver.ell_1b, "hash pad bits");
    auto* ver_l2 = verify->add_option("--ell2", ver.ell_2, "reply pad bits");
    auto* ver_l3 = verify->add_option("--ell3", ver.ell_3, "payload bits");
    auto* ver_hash = verify->add_option("--hash", ver.hash_family, "default|linear-test");
    auto* ver_hash_seed = verify->add_option("--hash-seed", ver.hash_seed, "linear matrix seed");
    auto* ver_attack =
        verify->add_option("--attack", ver.attack, "none|random-e1b|linear-forge|impersonate");
    auto* ver_trials = verify->add_option("--trials", trials, "trial count");
    auto* ver_seed = verify->add_option("--seed", seed, "master seed");
    auto* ver_threads = verify->add_option("--threads", threads, "worker threads");
    auto* ver_out = verify->add_option("--out", out, "output CSV path (default stdout)");

    AnalyzeParams ana;
    std::string ana_n_list, ana_m_list, ana_t_list;
    CLI::App* analyze = app.add_subcommand("analyze", "bound/exact/Monte-Carlo security table");
    analyze->add_option("--config", config_path, "JSON config file");
    auto* ana_n = analyze->add_option("--n", ana_n_list, "nodes per city (comma list)");
    auto* ana_m = analyze->add_option("--m", ana_m_list, "cities (comma list)");
    auto* ana_t = analyze->add_option("--t", ana_t_list, "honesty probability (comma list)");
    auto* ana_model = analyze->add_option("--model", ana.model, "bernoulli|fixed-fraction");
    auto* ana_trials = analyze->add_option("--trials", trials, "Monte Carlo trials (0 = skip)");
    auto* ana_seed = analyze->add_option("--seed", seed, "master seed");
    auto* ana_threads = analyze->add_option("--threads", threads, "worker threads");
    auto* ana_out = analyze->add_option("--out", out, "output CSV path (default stdout)");

    DimensionParams dim;
    std::string dim_ps_list, dim_delta_list, dim_m_list, dim_t_list;
    CLI::App* dimension = app.add_subcommand("dimension", "required n for a target p_s");
    dimension->add_option("--config", config_path, "JSON config file");
    auto* dim_ps = dimension->add_option("--ps", dim_ps_list, "target secure probability");
    auto* dim_delta = dimension->add_option("--delta", dim_delta_list, "failure budget");
    auto* dim_m = dimension->add_option("--m", dim_m_list, "cities (comma list)");
    auto* dim_t = dimension->add_option("--t", dim_t_list, "honesty probability (comma list)");
    auto* dim_seed = dimension->add_option("--seed", seed, "echoed in the header; no effect");
    dimension->add_option("--trials", trials, "accepted for flag uniformity; no effect");
    dimension->add_option("--threads", threads, "accepted for flag uniformity; no effect");
    auto* dim_out = dimension->add_option("--out", out, "output CSV path (default stdout)");

    CLI::App* sweep = app.add_subcommand("sweep", "config-driven analyze grid");
    auto* sweep_config = sweep->add_option("--config", config_path, "JSON config file");
    auto* sweep_trials = sweep->add_option("--trials", trials, "Monte Carlo trials (0 = skip)");
    auto* sweep_seed = sweep->add_option("--seed", seed, "master seed");
    auto* sweep_threads = sweep->add_option("--threads", threads, "worker threads");
    auto* sweep_out = sweep->add_option("--out", out, "output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (simulate->parsed()) {
            const json config = load_config(config_path);
            check_keys(config, {"m", "n", "ell", "t", "model", "pattern", "trials", "seed",
                                "threads", "out"});
            sim.m = effective(sim_m, sim.m, config, "m", sim.m);
            sim.n = effective(sim_n, sim.n, config, "n", sim.n);
            sim.ell = effective(sim_ell, sim.ell, config, "ell", sim.ell);
            sim.t = effective(sim_t, sim.t, config, "t", sim.t);
            sim.model = effective(sim_model, sim.model, config, "model", sim.model);
            sim.pattern = effective(sim_pattern, sim.pattern, config, "pattern", sim.pattern);
            sim.trials = effective(sim_trials, trials, config, "trials", sim.trials);
            sim.seed = effective(sim_seed, seed, config, "seed", sim.seed);
            sim.threads = effective(sim_threads, threads, config, "threads", sim.threads);
            sim.out = effective(sim_out, out, config, "out", sim.out);
            return cmd_simulate(sim);
        }
        if (verify->parsed()) {
            const json config = load_config(config_path);
            check_keys(config, {"ell_1a", "ell_1b", "ell_2", "ell_3", "hash", "hash_seed",
                                "attack", "trials", "seed", "threads", "out"});
            ver.ell_1a = effective(ver_l1a, ver.ell_1a, config, "ell_1a", ver.ell_1a);
            ver.ell_1b = effective(ver_l1b, ver.ell_1b, config, "ell_1b", ver.ell_1b);
            ver.ell_2 = effective(ver_l2, ver.ell_2, config, "ell_2", ver.ell_2);
            ver.ell_3 = effective(ver_l3, ver.ell_3, config, "ell_3", ver.ell_3);
            ver.hash_family =
                effective(ver_hash, ver.hash_family, config, "hash", ver.hash_family);
            ver.hash_seed =
                effective(ver_hash_seed, ver.hash_seed, config, "hash_seed", ver.hash_seed);
            ver.attack = effective(ver_attack, ver.attack, config, "attack", ver.attack);
            ver.trials = effective(ver_trials, trials, config, "trials", ver.trials);
            ver.seed = effective(ver_seed, seed, config, "seed", ver.seed);
            ver.threads = effective(ver_threads, threads, config, "threads", ver.threads);
            ver.out = effective(ver_out, out, config, "out", ver.out);
            return cmd_verify_demo(ver);
        }
        if (analyze->parsed()) {
            const json config = load_config(config_path);
            check_keys(config, {"n", "m", "t", "model", "trials", "seed", "threads", "out"});
            ana.n = effective_list<int>(ana_n, ana_n_list, config, "n", ana.n);
            ana.m = effective_list<int>(ana_m, ana_m_list, config, "m", ana.m);
            ana.t = effective_list<double>(ana_t, ana_t_list, config, "t", ana.t);
            ana.model = effective(ana_model, ana.model, config, "model", ana.model);
            ana.trials = effective(ana_trials, trials, config, "trials", ana.trials);
            ana.seed = effective(ana_seed, seed, config, "seed", ana.seed);
            ana.threads = effective(ana_threads, threads, config, "threads", ana.threads);
            ana.out = effective(ana_out, out, config, "out", ana.out);
            return run_grid("analyze", ana);
        }
        if (dimension->parsed()) {
            const json config = load_config(config_path);
            check_keys(config, {"ps", "delta", "m", "t", "seed", "out"});
            if (dim_ps->count() > 0 || config.contains("ps"))
                dim.p_s = effective_list<double>(dim_ps, dim_ps_list, config, "ps", {});
            if (dim_delta->count() > 0 || config.contains("delta"))
                dim.delta = effective_list<double>(dim_delta, dim_delta_list, config, "delta", {});
            dim.m = effective_list<int>(dim_m, dim_m_list, config, "m", dim.m);
            dim.t = effective_list<double>(dim_t, dim_t_list, config, "t", dim.t);
            dim.seed = effective(dim_seed, seed, config, "seed", dim.seed);
            dim.out = effective(dim_out, out, config, "out", dim.out);
            return cmd_dimension(dim);
        }
        if (sweep->parsed()) {
            if (sweep_config->count() == 0) throw ConfigError("sweep requires --config");
            const json config = load_config(config_path);
            check_keys(config, {"n", "m", "t", "model", "trials", "seed", "threads", "out"});
            if (!config.contains("n") || !config.contains("m") || !config.contains("t"))
                throw ConfigError("sweep config must provide n, m and t");
            ana.n = effective_list<int>(nullptr, "", config, "n", {});
            ana.m = effective_list<int>(nullptr, "", config, "m", {});
            ana.t = effective_list<double>(nullptr, "", config, "t", {});
            ana.model = effective<std::string>(nullptr, "", config, "model", ana.model);
            ana.trials = effective(sweep_trials, trials, config, "trials", ana.trials);
            ana.seed = effective(sweep_seed, seed, config, "seed", ana.seed);
            ana.threads = effective(sweep_threads, threads, config, "threads", ana.threads);
            ana.out = effective(sweep_out, out, config, "out", ana.out);
            return run_grid("sweep", ana);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const RunError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
