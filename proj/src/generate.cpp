#include "mfr/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace mfr {

ParsedNetwork generate_network(const GenerateOptions& options) {
    const int n = options.n;
    const int m = options.m;
    if (n < 2) throw std::invalid_argument("generate: n must be >= 2");
    if (options.max_state < 1) throw std::invalid_argument("generate: max_state must be >= 1");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m > max_edges)
        throw std::invalid_argument("generate: m = " + std::to_string(m) +
                                    " exceeds the simple-graph bound " + std::to_string(max_edges));
    if (m < n - 1)
        throw std::invalid_argument("generate: m = " + std::to_string(m) +
                                    " cannot connect " + std::to_string(n) + " vertices");

    std::mt19937_64 rng(options.seed);

    ParsedNetwork out;
    out.net.n = n;

    // Random spanning tree: attach each vertex to a random earlier one.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::set<std::pair<int, int>> used;
    for (int i = 1; i < n; ++i) {
        int a = order[i];
        int b = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
        used.insert({std::min(a, b), std::max(a, b)});
    }

    std::vector<std::pair<int, int>> spare;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!used.count({u, v})) spare.push_back({u, v});
    std::shuffle(spare.begin(), spare.end(), rng);
    for (int i = 0; i < m - (n - 1); ++i) used.insert(spare[i]);

    for (auto [u, v] : used) out.net.edges.push_back({u, v});

    if (options.random_dist) {
        std::uniform_real_distribution<double> unit(0.05, 1.0);
        for (int k = 0; k < m; ++k) {
            std::vector<double> row(options.max_state + 1);
            double sum = 0.0;
            for (double& q : row) sum += (q = unit(rng));
            for (double& q : row) q /= sum;
            out.dist.p.push_back(std::move(row));
        }
    } else {
        out.dist = uniform_distribution(out.net, options.max_state);
    }

    canonicalize(out.net, out.dist);
    validate(out.net, out.dist);
    return out;
}

}  // namespace mfr
