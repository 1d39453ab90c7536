// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "mfr/enumeration.hpp"
#include "mfr/generate.hpp"
#include "mfr/maxflow.hpp"
#include "mfr/reliability.hpp"

using namespace mfr;
using namespace mfr::testing;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("criterion %2d %-28s %s%s%s\n", id, name.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures;
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion_1_bridge_levels() {
    auto t0 = Clock::now();
    auto rep = all_levels_reliability(bridge_network(), bridge_distribution());
    double elapsed = seconds_since(t0);
    const double expect_r[] = {0.041595189, 0.136296380, 0.384884446, 0.429671250};
    const double expect_R[] = {0.992447265, 0.950852076, 0.814555696, 0.429671250};
    bool ok = rep.d_max == 4 && elapsed < 1.0;
    std::string detail;
    for (int d = 1; d <= 4 && ok; ++d) {
        ok = near(rep.level_r(d), expect_r[d - 1], 1e-9) &&
             near(rep.level_R(d), expect_R[d - 1], 1e-9);
        if (!ok) {
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "d=%d: stated r=%.9f R=%.9f, engine (oracle-confirmed) r=%.9f R=%.9f",
                          d, expect_r[d - 1], expect_R[d - 1], rep.level_r(d), rep.level_R(d));
            detail = buf;
        }
    }
    report(1, "bridge exact levels", ok, detail);
}

void criterion_2_xfc_counters() {
    auto t0 = Clock::now();
    auto three_state = all_levels_reliability(bridge_network(), bridge_distribution());
    auto net = bridge_network();
    auto five_state = all_levels_reliability(net, uniform_distribution(net, 4));
    double elapsed = seconds_since(t0);
    bool ok = three_state.x_fc == StateVector{1, 0, 0, 1, 0} && three_state.n_total == 243 &&
              three_state.n_total - three_state.n_processed == 28 &&
              three_state.n_processed == 215 && five_state.n_total == 3125 &&
              five_state.n_processed == 2999 && elapsed < 1.0;
    report(2, "bridge x_fc and counters", ok);
}

void criterion_3_uniform_levels() {
    auto t0 = Clock::now();
    auto net = bridge_network();
    auto dist = uniform_distribution(net, 4);
    auto rep = all_levels_reliability(net, dist);
    double elapsed = seconds_since(t0);
    const double expect_r[] = {0.1248, 0.1664, 0.18496, 0.192};
    bool ok = rep.d_max == 8 && elapsed < 1.0;
    std::string detail;
    for (int d = 1; d <= 4 && ok; ++d) {
        ok = near(rep.level_r(d), expect_r[d - 1], 1e-9);
        if (!ok) {
            char buf[120];
            std::snprintf(buf, sizeof(buf),
                          "d=%d: stated r=%.5f, engine (oracle-confirmed) r=%.5f", d,
                          expect_r[d - 1], rep.level_r(d));
            detail = buf;
        }
    }
    // the published table stops at r_4; the upper levels check against
    // the independent oracle instead
    auto oracle = exhaustive_oracle(net, dist);
    for (int d = 5; d <= 8 && ok; ++d) ok = near(rep.level_r(d), oracle.level_r(d), 1e-9);
    report(3, "uniform five-state bridge", ok, detail);
}

void criterion_4_maxflow_trace() {
    auto net = bridge_network();
    bool ok = max_flow(net, {1, 1, 1, 2, 0}).value == 2 &&
              max_flow(net, {2, 2, 2, 2, 2}).value == 4;
    report(4, "max-flow worked trace", ok);
}

void criterion_5_series_law() {
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n) {
        auto net = series_network(n);
        EdgeStateDistribution dist;
        dist.p.assign(n, {0.1, 0.9});
        auto rep = all_levels_reliability(net, dist);
        ok = rep.d_max == 1 && near(rep.level_R(1), std::pow(0.9, n), 1e-12);
    }
    report(5, "series product law", ok);
}

void criterion_6_oracle_equivalence() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(6);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        GenerateOptions gen;
        gen.n = std::uniform_int_distribution<int>(2, 6)(rng);
        int max_m = gen.n * (gen.n - 1) / 2;
        gen.m = std::uniform_int_distribution<int>(gen.n - 1, std::min(9, max_m))(rng);
        gen.max_state = std::uniform_int_distribution<int>(1, 3)(rng);
        gen.seed = rng();
        gen.random_dist = true;
        auto inst = generate_network(gen);
        auto engine = all_levels_reliability(inst.net, inst.dist);
        auto oracle = exhaustive_oracle(inst.net, inst.dist);
        ok = engine.d_max == oracle.d_max;
        for (int d = 1; d <= engine.d_max && ok; ++d)
            ok = near(engine.level_r(d), oracle.level_r(d), 1e-9);
        if (!ok) detail = "failed at trial " + std::to_string(trial);
    }
    if (seconds_since(t0) >= 300.0) {
        ok = false;
        detail = "suite exceeded 5 min";
    }
    report(6, "oracle equivalence (200x)", ok, detail);
}

void criterion_7_flow_duality() {
    std::mt19937_64 rng(7);
    bool ok = true;
    int pairs = 0;
    while (pairs < 10000 && ok) {
        GenerateOptions gen;
        gen.n = std::uniform_int_distribution<int>(2, 8)(rng);
        int max_m = gen.n * (gen.n - 1) / 2;
        gen.m = std::uniform_int_distribution<int>(gen.n - 1, max_m)(rng);
        gen.max_state = 3;
        gen.seed = rng();
        auto inst = generate_network(gen);
        MaxFlowSolver solver(inst.net);
        StateVector x(inst.net.edge_count());
        for (int rep = 0; rep < 50 && ok; ++rep, ++pairs) {
            for (int& s : x) s = std::uniform_int_distribution<int>(0, 3)(rng);
            ok = solver.solve(x).value == min_cut_oracle(inst.net, x);
        }
    }
    report(7, "flow-cut duality (10^4 pairs)", ok);
}

void criterion_8_normalization() {
    std::mt19937_64 rng(8);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        GenerateOptions gen;
        gen.n = std::uniform_int_distribution<int>(2, 6)(rng);
        int max_m = gen.n * (gen.n - 1) / 2;
        gen.m = std::uniform_int_distribution<int>(gen.n - 1, std::min(9, max_m))(rng);
        gen.max_state = std::uniform_int_distribution<int>(1, 3)(rng);
        gen.seed = rng();
        gen.random_dist = true;
        auto inst = generate_network(gen);
        auto rep = all_levels_reliability(inst.net, inst.dist);
        double mass = rep.pr_disconnected;
        for (double rd : rep.r) mass += rd;
        ok = near(mass, 1.0, 1e-9);
        for (size_t d = 1; d < rep.R.size() && ok; ++d) ok = rep.R[d - 1] >= rep.R[d];
    }
    report(8, "normalization + monotone R", ok);
}

void criterion_9_skip_soundness() {
    std::mt19937_64 rng(6);  // same instance stream as criterion 6
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        GenerateOptions gen;
        gen.n = std::uniform_int_distribution<int>(2, 6)(rng);
        int max_m = gen.n * (gen.n - 1) / 2;
        gen.m = std::uniform_int_distribution<int>(gen.n - 1, std::min(9, max_m))(rng);
        gen.max_state = std::uniform_int_distribution<int>(1, 3)(rng);
        gen.seed = rng();
        gen.random_dist = true;
        auto inst = generate_network(gen);
        auto skipped = all_levels_reliability(inst.net, inst.dist);
        EngineOptions full;
        full.skip_to_first_connected = false;
        auto swept = all_levels_reliability(inst.net, inst.dist, full);
        ok = skipped.d_max == swept.d_max;
        for (int d = 1; d <= skipped.d_max && ok; ++d)
            ok = near(skipped.level_r(d), swept.level_r(d), 1e-12);
    }
    report(9, "skip-soundness", ok);
}

void criterion_10_partition_determinism() {
    bool ok = true;
    for (const auto& dist :
         {bridge_distribution(), uniform_distribution(bridge_network(), 4)}) {
        auto net = bridge_network();
        auto baseline = all_levels_reliability(net, dist);
        for (int workers : {2, 4, 8}) {
            EngineOptions options;
            options.workers = workers;
            auto rep = all_levels_reliability(net, dist, options);
            ok = ok && rep.d_max == baseline.d_max;
            for (int d = 1; d <= baseline.d_max && ok; ++d)
                ok = near(rep.level_r(d), baseline.level_r(d), 1e-12);
        }
    }
    report(10, "partition determinism", ok);
}

void criterion_11_monte_carlo() {
    auto t0 = Clock::now();
    auto net = bridge_network();
    auto dist = bridge_distribution();
    auto exact = all_levels_reliability(net, dist);
    auto mc = monte_carlo(net, dist, 1000000, 20240817);
    double elapsed = seconds_since(t0);
    bool ok = mc.d_max == exact.d_max && elapsed < 30.0;
    for (int d = 1; d <= exact.d_max && ok; ++d) {
        double se = std::max(mc.std_errors[d - 1], 1e-12);
        ok = std::abs(mc.estimates[d - 1] - exact.level_R(d)) <= 4.0 * se;
    }
    report(11, "Monte-Carlo consistency", ok);
}

}  // namespace

int main() {
    criterion_1_bridge_levels();
    criterion_2_xfc_counters();
    criterion_3_uniform_levels();
    criterion_4_maxflow_trace();
    criterion_5_series_law();
    criterion_6_oracle_equivalence();
    criterion_7_flow_duality();
    criterion_8_normalization();
    criterion_9_skip_soundness();
    criterion_10_partition_determinism();
    criterion_11_monte_carlo();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
