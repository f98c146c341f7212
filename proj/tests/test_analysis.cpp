#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "relaysim/analysis.hpp"
#include "relaysim/topology.hpp"

using namespace relaysim;

namespace {

/// Brute-force secure probability: enumerate every compromise pattern and
/// weight it by its Bernoulli probability. Independent of the DP.
double enumerated_secure_prob(int n, int m, double t) {
    const NetworkSpec spec(m, n, 1);
    const int total = n * m;
    double secure = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
        CompromisePattern pattern(m, n);
        double prob = 1.0;
        for (int idx = 0; idx < total; ++idx) {
            if (mask & (1u << idx)) {
                pattern.set_dishonest(idx % n + 1, idx / n + 1, true);
                prob *= 1.0 - t;
            } else {
                prob *= t;
            }
        }
        if (!has_cut(spec, pattern)) secure += prob;
    }
    return secure;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("bound_ps closed form") {
    CHECK(bound_ps(3, 5, 1.0) == 1.0);
    CHECK(bound_ps(3, 5, 0.0) == 0.0);
    CHECK(bound_ps(4, 1, 0.3) == 1.0);  // no stages
    CHECK(bound_ps(5, 3, 0.6) == doctest::Approx(0.7967808502460684).epsilon(1e-12));
    CHECK(bound_ps(1, 2, 0.6) == doctest::Approx(0.36).epsilon(1e-12));
    CHECK_THROWS_AS(bound_ps(0, 2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(bound_ps(2, 2, 1.5), std::invalid_argument);
}

TEST_CASE("bound_ps is monotone in each parameter") {
    for (int n = 1; n <= 5; ++n)
        for (int m = 2; m <= 6; ++m)
            for (int tt = 1; tt <= 8; ++tt) {
                const double t = tt / 10.0;
                CHECK(bound_ps(n + 1, m, t) >= bound_ps(n, m, t));
                CHECK(bound_ps(n, m + 1, t) <= bound_ps(n, m, t));
                CHECK(bound_ps(n, m, t + 0.1) >= bound_ps(n, m, t));
            }
}

TEST_CASE("exact_secure_prob small cases") {
    CHECK(exact_secure_prob(1, 2, 0.7) == doctest::Approx(0.49).epsilon(1e-12));
    CHECK(exact_secure_prob(1, 3, 0.9) == doctest::Approx(0.729).epsilon(1e-12));
    CHECK(exact_secure_prob(2, 3, 0.5) == doctest::Approx(0.265625).epsilon(1e-12));
    // single city: compromised iff fully dishonest
    CHECK(exact_secure_prob(3, 1, 0.5) == doctest::Approx(1.0 - 0.125).epsilon(1e-12));
    CHECK_THROWS_AS(exact_secure_prob(13, 2, 0.5), std::invalid_argument);
}

TEST_CASE("exact_secure_prob equals exhaustive enumeration") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            if (n * m > 16) continue;
            for (const double t : {0.1, 0.35, 0.5, 0.8}) {
                CHECK(exact_secure_prob(n, m, t) ==
                      doctest::Approx(enumerated_secure_prob(n, m, t)).epsilon(1e-12));
            }
        }
}

TEST_CASE("the closed form is a true lower bound, tight at m = 2") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 2; m <= 8; ++m)
            for (int tt = 1; tt <= 9; ++tt) {
                const double t = tt / 10.0;
                const double exact = exact_secure_prob(n, m, t);
                CHECK(exact >= bound_ps(n, m, t) - 1e-12);
                if (m == 2)
                    CHECK(exact == doctest::Approx(bound_ps(n, m, t)).epsilon(1e-12));
            }
}

TEST_CASE("monte carlo agrees with the exact value") {
    const MonteCarloResult sure = monte_carlo_secure_prob(2, 3, 1.0, 1000, 5);
    CHECK(sure.estimate == 1.0);
    CHECK(sure.half_width_99 == 0.0);

    const MonteCarloResult mc =
        monte_carlo_secure_prob(1, 3, 0.9, 1000000, 7, CompromiseModel::Bernoulli, 4);
    CHECK(std::abs(mc.estimate - 0.729) < 0.002);
    const MonteCarloResult fixed =
        monte_carlo_secure_prob(2, 3, 0.5, 100000, 7, CompromiseModel::FixedFraction);
    CHECK(fixed.estimate > 0.0);
    CHECK(fixed.estimate < 1.0);
    CHECK_THROWS_AS(monte_carlo_secure_prob(1, 2, 0.5, 0, 1), std::invalid_argument);
}

TEST_CASE("monte carlo is consistent with the closed-form lower bound") {
    const MonteCarloResult mc =
        monte_carlo_secure_prob(4, 6, 0.7, 1000000, 13, CompromiseModel::Bernoulli, 4);
    CHECK(mc.estimate >= bound_ps(4, 6, 0.7) - 3.0 * mc.half_width_99);
}

TEST_CASE("monte carlo is identical for any thread count") {
    for (const auto model : {CompromiseModel::Bernoulli, CompromiseModel::FixedFraction}) {
        const MonteCarloResult serial = monte_carlo_secure_prob(3, 4, 0.6, 20000, 11, model, 1);
        const MonteCarloResult parallel = monte_carlo_secure_prob(3, 4, 0.6, 20000, 11, model, 7);
        CHECK(serial.secure_count == parallel.secure_count);
        CHECK(serial.estimate == parallel.estimate);
    }
}

TEST_CASE("monte carlo 99% interval covers the exact value") {
    const double exact = exact_secure_prob(3, 4, 0.6);
    int covered = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const MonteCarloResult mc = monte_carlo_secure_prob(3, 4, 0.6, 10000, 900 + rep);
        if (std::abs(mc.estimate - exact) <= mc.half_width_99) ++covered;
    }
    CHECK(covered >= 190);
}

TEST_CASE("required_n worked examples") {
    CHECK(required_n(0.999, 11, 0.5) == 33);
    CHECK(required_n(0.36, 2, 0.6) == 1);
    CHECK_THROWS_AS(required_n(0.5, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(required_n(1.0, 3, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(required_n(0.5, 3, 0.0), std::invalid_argument);
}

TEST_CASE("required_n is minimal across a parameter grid") {
    for (const double p_s : {0.5, 0.9, 0.99, 0.999, 0.9999})
        for (const int m : {2, 3, 5, 11, 20})
            for (const double t : {0.3, 0.5, 0.6, 0.8}) {
                const int n = required_n(p_s, m, t);
                CHECK(bound_ps(n, m, t) >= p_s);
                if (n > 1) CHECK(bound_ps(n - 1, m, t) < p_s);
            }
}

TEST_CASE("approx_n worked examples") {
    CHECK(approx_n(0.001, 11, 0.5) == doctest::Approx(32.01569111860438).epsilon(1e-12));
    // log(m-1) vanishes at m=2
    CHECK(approx_n(0.01, 2, 0.5) ==
          doctest::Approx(-std::log(0.01) / -std::log(0.75)).epsilon(1e-12));
    CHECK_THROWS_AS(approx_n(0.0, 3, 0.5), std::invalid_argument);
}

TEST_CASE("ceil(approx_n) matches required_n for small delta") {
    for (const double delta : {1e-3, 1e-4, 1e-5, 1e-6})
        for (int m = 3; m <= 50; ++m)
            for (int tt = 30; tt <= 90; tt += 5) {
                const double t = tt / 100.0;
                CHECK(static_cast<int>(std::ceil(approx_n(delta, m, t))) ==
                      required_n(1.0 - delta, m, t));
            }
}

TEST_CASE("chosen-k adversary is beaten exactly up to k = n") {
    CHECK(chosen_k_secure(4, 4));
    CHECK(!chosen_k_secure(4, 5));
    CHECK(chosen_k_secure(1, 1));
    CHECK_THROWS_AS(chosen_k_secure(0, 1), std::invalid_argument);
}

TEST_CASE("pvss constants") {
    CHECK(pvss_dos_tolerance(4) == 0);
    CHECK(pvss_dos_tolerance(8) == 1);
    CHECK(pvss_dos_tolerance(1) == 0);
    CHECK(pvss_dos_tolerance(5) == 1);
    CHECK(pvss_dos_tolerance(12) == 2);
    CHECK(pvss_threshold() == doctest::Approx(0.8660254037844386).epsilon(1e-15));
}

TEST_CASE("bandwidth model") {
    const BandwidthModel tiny = bandwidth_model(1, 1, 1);
    CHECK(tiny.intercity_bits == 2);
    CHECK(tiny.intracity_bits == 0);

    const BandwidthModel b = bandwidth_model(3, 4, 128);
    CHECK(b.intercity_bits == 1920);
    CHECK(b.intracity_bits == 3072);
    CHECK(b.all_pairs_intercity == doctest::Approx(0.5 * 16.0 * 9.0 * 128.0));

    // doubling m doubles the intercity volume up to the n*ell endpoint term
    const BandwidthModel base = bandwidth_model(5, 10, 64);
    const BandwidthModel doubled = bandwidth_model(5, 20, 64);
    CHECK(doubled.intercity_bits == 2 * base.intercity_bits - 5 * 64);
}

TEST_CASE("analyze_security assembles a report") {
    const SecurityReport report = analyze_security(2, 3, 0.5, 10000, 3);
    CHECK(report.bound == doctest::Approx(bound_ps(2, 3, 0.5)));
    REQUIRE(report.exact.has_value());
    CHECK(*report.exact == doctest::Approx(0.265625));
    REQUIRE(report.mc.has_value());
    CHECK(std::abs(report.mc->estimate - 0.265625) < 0.02);
    CHECK(!report.m1_caveat);

    const SecurityReport no_exact = analyze_security(13, 3, 0.5, 0, 3);
    CHECK(!no_exact.exact.has_value());
    CHECK(no_exact.exact_skipped);
    CHECK(no_exact.caveats() == "exact-skipped");
    CHECK(!no_exact.mc.has_value());

    const SecurityReport fixed_model =
        analyze_security(2, 3, 0.5, 1000, 3, CompromiseModel::FixedFraction);
    CHECK(!fixed_model.exact.has_value());  // DP covers the Bernoulli model only
    CHECK(fixed_model.exact_skipped);

    const SecurityReport m1 = analyze_security(2, 1, 0.5, 0, 3);
    CHECK(m1.m1_caveat);
    CHECK(m1.bound == 1.0);
    REQUIRE(m1.exact.has_value());
    CHECK(*m1.exact == doctest::Approx(0.75));
}

TEST_CASE("report serialization") {
    const SecurityReport report = analyze_security(2, 3, 0.5, 1000, 3);
    CHECK(SecurityReport::csv_header() ==
          "n,m,t,bound,exact,mc_estimate,mc_half_width,mc_trials,caveat");
    const std::string row = report.csv_row();
    CHECK(row.substr(0, 8) == "2,3,0.5,");
    CHECK(row.find("0.265625") != std::string::npos);

    const std::string json = report.to_json();
    CHECK(json.find("\"bound\"") != std::string::npos);
    CHECK(json.find("\"exact\":0.265625") != std::string::npos);

    const SecurityReport sparse = analyze_security(13, 2, 0.5, 0, 3);
    const std::string sparse_row = sparse.csv_row();
    CHECK(sparse_row.substr(0, 9) == "13,2,0.5,");
    CHECK(sparse_row.find(",,,,") != std::string::npos);  // exact and mc columns empty
    CHECK(sparse_row.substr(sparse_row.size() - 13) == "exact-skipped");
    CHECK(sparse.to_json().find("\"exact\":null") != std::string::npos);
    CHECK(sparse.to_json().find("\"caveat\":\"exact-skipped\"") != std::string::npos);
}

}  // TEST_SUITE
