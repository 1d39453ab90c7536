#include "mfr/reliability.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "mfr/enumeration.hpp"
#include "mfr/maxflow.hpp"

namespace mfr {

namespace {

using Clock = std::chrono::steady_clock;

struct WorkerBuckets {
    std::vector<KahanSum> by_level;  // index 0 = disconnected, 1..d_max = exact level
};

// Sweeps the rank interval [lo, hi), bucketing Pr(X) by F(X).
void sweep_interval(const Network& net, const EdgeStateDistribution& dist,
                    const RadixProfile& prof, u128 lo, u128 hi, int d_max,
                    WorkerBuckets& out, const std::atomic<bool>& abort,
                    std::atomic<bool>& timed_out, Clock::time_point deadline,
                    bool has_deadline) {
    if (lo >= hi) return;
    MaxFlowSolver solver(net);
    StateVector x = unrank(lo, prof);
    u128 remaining = hi - lo;
    std::uint64_t since_check = 0;

    for (;;) {
        double pr = pr_vector(x, dist);
        auto f = solver.solve(x).value;
        if (f < 0 || f > d_max)
            throw std::logic_error("flow level outside [0, d_max]: internal error");
        out.by_level[static_cast<size_t>(f)].add(pr);

        if (--remaining == 0) break;
        if (++since_check >= 8192) {
            since_check = 0;
            if (abort.load(std::memory_order_relaxed)) return;
            if (has_deadline && Clock::now() > deadline) {
                timed_out.store(true, std::memory_order_relaxed);
                return;
            }
        }
        auto next = next_vector(x, prof);
        if (!next) throw std::logic_error("counter exhausted before interval end");
        x = std::move(*next);
    }
}

}  // namespace

AllLevelsReport all_levels_reliability(const Network& net, const EdgeStateDistribution& dist,
                                       const EngineOptions& options) {
    const auto t0 = Clock::now();
    validate(net, dist);
    if (options.workers < 1) throw std::invalid_argument("workers must be >= 1");

    const RadixProfile prof = RadixProfile::from(dist);
    if (prof.total > options.budget && !options.budget_override)
        throw BudgetError("state space has " + to_string(prof.total) +
                          " vectors, above the budget of " + to_string(options.budget) +
                          " (pass the override to proceed)");

    AllLevelsReport rep;
    rep.n_total = prof.total;
    rep.workers = options.workers;

    StateVector all_up(net.edge_count());
    for (int k = 0; k < net.edge_count(); ++k) all_up[k] = dist.max_state(k);
    rep.d_max = static_cast<int>(max_flow(net, all_up).value);

    if (rep.d_max == 0) {
        rep.pr_disconnected = 1.0;
        rep.n_processed = 0;
        rep.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
        return rep;
    }

    auto fc = find_first_connected_vector(net, dist);
    if (!fc) throw std::logic_error("d_max > 0 but no first connected vector");
    rep.x_fc = fc->x_fc;

    const u128 start_rank = options.skip_to_first_connected ? fc->rank : 0;
    rep.n_processed = prof.total - start_rank;

    const bool has_deadline = options.time_limit_s > 0.0;
    const auto deadline =
        t0 + std::chrono::duration_cast<Clock::duration>(
                 std::chrono::duration<double>(options.time_limit_s));

    auto intervals = partition_range(start_rank, prof.total, options.workers);
    std::vector<WorkerBuckets> buckets(options.workers);
    for (auto& b : buckets) b.by_level.resize(rep.d_max + 1);

    std::atomic<bool> abort{false};
    std::atomic<bool> timed_out{false};
    if (options.workers == 1) {
        sweep_interval(net, dist, prof, intervals[0].first, intervals[0].second, rep.d_max,
                       buckets[0], abort, timed_out, deadline, has_deadline);
    } else {
        std::vector<std::thread> threads;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (int i = 0; i < options.workers; ++i) {
            threads.emplace_back([&, i] {
                try {
                    sweep_interval(net, dist, prof, intervals[i].first, intervals[i].second,
                                   rep.d_max, buckets[i], abort, timed_out, deadline,
                                   has_deadline);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    abort.store(true, std::memory_order_relaxed);
                }
            });
        }
        for (auto& t : threads) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    if (timed_out.load())
        throw TimeoutError("sweep exceeded the time limit of " +
                           std::to_string(options.time_limit_s) + " s");

    // Merge in worker order so the result is identical for a given k.
    rep.r.assign(rep.d_max, 0.0);
    KahanSum connected_mass;
    for (int d = 1; d <= rep.d_max; ++d) {
        KahanSum level;
        for (const auto& b : buckets) level.add(b.by_level[d].sum);
        rep.r[d - 1] = level.sum;
        connected_mass.add(level.sum);
    }
    // Skipped-prefix vectors are all disconnected, so their mass lands
    // here together with the processed disconnected vectors.
    rep.pr_disconnected = 1.0 - connected_mass.sum;
    rep.R = suffix_sums(rep.r);
    rep.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

std::vector<double> suffix_sums(const std::vector<double>& r) {
    std::vector<double> R(r.size());
    KahanSum acc;
    for (size_t d = r.size(); d-- > 0;) {
        if (r[d] < 0.0) throw std::invalid_argument("negative level mass");
        acc.add(r[d]);
        R[d] = acc.sum;
    }
    return R;
}

MonteCarloReport monte_carlo(const Network& net, const EdgeStateDistribution& dist,
                             std::int64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    validate(net, dist);

    MonteCarloReport rep;
    rep.samples = samples;
    rep.seed = seed;

    StateVector all_up(net.edge_count());
    for (int k = 0; k < net.edge_count(); ++k) all_up[k] = dist.max_state(k);
    rep.d_max = static_cast<int>(max_flow(net, all_up).value);
    if (rep.d_max == 0) return rep;

    std::vector<std::vector<double>> cdf(net.edge_count());
    for (int k = 0; k < net.edge_count(); ++k) {
        double acc = 0.0;
        for (double p : dist.p[k]) cdf[k].push_back(acc += p);
        cdf[k].back() = 1.0;  // clamp rounding so the last state is always reachable
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    MaxFlowSolver solver(net);
    StateVector x(net.edge_count());
    std::vector<std::int64_t> exact_level(rep.d_max + 1, 0);

    for (std::int64_t i = 0; i < samples; ++i) {
        for (int k = 0; k < net.edge_count(); ++k) {
            double u = unit(rng);
            int s = 0;
            while (cdf[k][s] <= u) ++s;
            x[k] = s;
        }
        auto f = solver.solve(x).value;
        ++exact_level[std::min<std::int64_t>(f, rep.d_max)];
    }

    std::int64_t at_least = 0;
    rep.estimates.assign(rep.d_max, 0.0);
    rep.std_errors.assign(rep.d_max, 0.0);
    for (int d = rep.d_max; d >= 1; --d) {
        at_least += exact_level[d];
        double est = static_cast<double>(at_least) / static_cast<double>(samples);
        rep.estimates[d - 1] = est;
        rep.std_errors[d - 1] = std::sqrt(est * (1.0 - est) / static_cast<double>(samples));
    }
    return rep;
}

AllLevelsReport exhaustive_oracle(const Network& net, const EdgeStateDistribution& dist) {
    const auto t0 = Clock::now();
    validate(net, dist);
    if (net.n > 12) throw std::invalid_argument("exhaustive_oracle: n > 12");
    const RadixProfile prof = RadixProfile::from(dist);
    if (prof.total > 1000000) throw std::invalid_argument("exhaustive_oracle: more than 10^6 vectors");

    AllLevelsReport rep;
    rep.n_total = prof.total;
    rep.n_processed = prof.total;

    StateVector all_up(net.edge_count());
    for (int k = 0; k < net.edge_count(); ++k) all_up[k] = dist.max_state(k);
    rep.d_max = static_cast<int>(min_cut_oracle(net, all_up));
    if (rep.d_max == 0) {
        rep.pr_disconnected = 1.0;
        rep.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
        return rep;
    }

    std::vector<KahanSum> by_level(rep.d_max + 1);
    StateVector x(net.edge_count(), 0);
    for (;;) {
        auto f = min_cut_oracle(net, x);
        by_level[static_cast<size_t>(f)].add(pr_vector(x, dist));
        auto next = next_vector(x, prof);
        if (!next) break;
        x = std::move(*next);
    }

    rep.r.resize(rep.d_max);
    KahanSum connected_mass;
    for (int d = 1; d <= rep.d_max; ++d) {
        rep.r[d - 1] = by_level[d].sum;
        connected_mass.add(by_level[d].sum);
    }
    rep.pr_disconnected = 1.0 - connected_mass.sum;
    rep.R = suffix_sums(rep.r);
    rep.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

}  // namespace mfr
