#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfr/bigcount.hpp"
#include "mfr/network.hpp"
#include "mfr/report.hpp"

namespace mfr {

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TimeoutError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Compensated (Kahan) accumulator; the sweep adds up to billions of
// tiny probabilities per bucket.
struct KahanSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        double y = value - compensation;
        double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
};

struct EngineOptions {
    int workers = 1;
    u128 budget = u128{1} << 40;  // refuse larger state spaces
    bool budget_override = false;
    bool skip_to_first_connected = true;  // false forces a full sweep from rank 0
    double time_limit_s = 0.0;            // 0 = unlimited
};

// The all-levels sweep: walks the state space in counting order from
// the first connected vector, evaluates the maximum flow per vector,
// and buckets each vector's probability by its exact flow level.
// R is formed afterwards as suffix sums. Every vector skipped before
// the first connected one is disconnected, so the skipped mass is
// folded into pr_disconnected via 1 - (processed mass).
AllLevelsReport all_levels_reliability(const Network& net, const EdgeStateDistribution& dist,
                                       const EngineOptions& options = {});

// R[d] = sum of r[k] for k >= d, accumulated highest level first.
std::vector<double> suffix_sums(const std::vector<double>& r);

struct MonteCarloReport {
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::string generator = "mt19937_64";
    int d_max = 0;
    std::vector<double> estimates;   // estimates[d-1] approximates R_d
    std::vector<double> std_errors;  // binomial standard errors
};

MonteCarloReport monte_carlo(const Network& net, const EdgeStateDistribution& dist,
                             std::int64_t samples, std::uint64_t seed);

// Independent ground truth: sweeps the FULL space from rank 0 (no
// first-connected skip) and rates each vector with the exhaustive
// min-cut oracle instead of the augmenting-path solver.
// Requires n <= 12 and at most 10^6 vectors.
AllLevelsReport exhaustive_oracle(const Network& net, const EdgeStateDistribution& dist);

}  // namespace mfr
