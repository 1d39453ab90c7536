#pragma once

#include "mfr/network.hpp"

namespace mfr::testing {

// The 4-vertex bridge: a1={1,2}, a2={1,3}, a3={2,3}, a4={2,4}, a5={3,4}.
inline Network bridge_network() {
    Network net;
    net.n = 4;
    net.edges = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
    return net;
}

// Three-state distributions used throughout the worked bridge runs.
inline EdgeStateDistribution bridge_distribution() {
    EdgeStateDistribution dist;
    dist.p = {
        {0.10, 0.20, 0.70},
        {0.05, 0.10, 0.85},
        {0.01, 0.19, 0.80},
        {0.10, 0.15, 0.75},
        {0.025, 0.075, 0.900},
    };
    return dist;
}

inline Network series_network(int edge_count) {
    Network net;
    net.n = edge_count + 1;
    for (int i = 1; i <= edge_count; ++i) net.edges.push_back({i, i + 1});
    return net;
}

}  // namespace mfr::testing
