#pragma once

#include <cstdint>
#include <vector>

#include "mfr/network.hpp"

namespace mfr {

struct FlowResult {
    std::int64_t value = 0;
    int augmentations = 0;  // diagnostic only, no contract
};

// Reusable Edmonds-Karp solver. The adjacency structure is built once
// from the network; solve() only resets capacities, so one solver can
// evaluate millions of state vectors without reallocating. Each worker
// thread owns its own instance.
class MaxFlowSolver {
public:
    explicit MaxFlowSolver(const Network& net);

    FlowResult solve(const StateVector& x);

private:
    int n_;
    int source_;
    int sink_;
    // Arc 2k and 2k+1 are the two directions of undirected edge k.
    std::vector<int> head_;
    std::vector<std::vector<int>> adj_;  // arc indices per vertex
    std::vector<std::int64_t> cap_;
    std::vector<int> parent_arc_;
    std::vector<int> queue_;
};

FlowResult max_flow(const Network& net, const StateVector& x);

// Exhaustive min-cut over all 2^(n-2) source-side subsets; equals
// max_flow by duality. Independent verification path, n <= 20.
std::int64_t min_cut_oracle(const Network& net, const StateVector& x);

}  // namespace mfr
