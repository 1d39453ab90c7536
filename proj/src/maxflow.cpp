#include "mfr/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mfr {

MaxFlowSolver::MaxFlowSolver(const Network& net)
    : n_(net.n), source_(net.source()), sink_(net.sink()) {
    adj_.resize(n_ + 1);
    head_.reserve(2 * net.edges.size());
    for (const Edge& e : net.edges) {
        adj_[e.u].push_back(static_cast<int>(head_.size()));
        head_.push_back(e.v);
        adj_[e.v].push_back(static_cast<int>(head_.size()));
        head_.push_back(e.u);
    }
    cap_.resize(head_.size());
    parent_arc_.resize(n_ + 1);
    queue_.reserve(n_);
}

FlowResult MaxFlowSolver::solve(const StateVector& x) {
    if (x.size() * 2 != head_.size())
        throw ValidationError("state vector length does not match edge count");
    for (size_t k = 0; k < x.size(); ++k) {
        if (x[k] < 0) throw ValidationError("negative edge state");
        cap_[2 * k] = x[k];
        cap_[2 * k + 1] = x[k];
    }

    FlowResult result;
    for (;;) {
        // BFS for a shortest augmenting path in the residual graph.
        std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
        parent_arc_[source_] = -2;
        queue_.clear();
        queue_.push_back(source_);
        for (size_t qi = 0; qi < queue_.size() && parent_arc_[sink_] == -1; ++qi) {
            int v = queue_[qi];
            for (int arc : adj_[v]) {
                int w = head_[arc];
                if (cap_[arc] > 0 && parent_arc_[w] == -1) {
                    parent_arc_[w] = arc;
                    queue_.push_back(w);
                }
            }
        }
        if (parent_arc_[sink_] == -1) break;

        std::int64_t bottleneck = std::numeric_limits<std::int64_t>::max();
        for (int v = sink_; v != source_;) {
            int arc = parent_arc_[v];
            bottleneck = std::min(bottleneck, cap_[arc]);
            v = head_[arc ^ 1];
        }
        for (int v = sink_; v != source_;) {
            int arc = parent_arc_[v];
            cap_[arc] -= bottleneck;
            cap_[arc ^ 1] += bottleneck;
            v = head_[arc ^ 1];
        }
        result.value += bottleneck;
        ++result.augmentations;
    }
    return result;
}

FlowResult max_flow(const Network& net, const StateVector& x) {
    MaxFlowSolver solver(net);
    return solver.solve(x);
}

std::int64_t min_cut_oracle(const Network& net, const StateVector& x) {
    if (net.n > 20)
        throw std::invalid_argument("min_cut_oracle: n > 20 is infeasible to enumerate");
    if (static_cast<int>(x.size()) != net.edge_count())
        throw ValidationError("state vector length does not match edge count");

    // Subsets of vertices 2..n-1 joining the source side; vertex 1 is
    // always on the source side, vertex n never is.
    const int free_vertices = net.n - 2;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t mask = 0; mask < (1u << free_vertices); ++mask) {
        auto on_source_side = [&](int v) {
            if (v == 1) return true;
            if (v == net.n) return false;
            return ((mask >> (v - 2)) & 1u) != 0;
        };
        std::int64_t cut = 0;
        for (int k = 0; k < net.edge_count(); ++k) {
            const Edge& e = net.edges[k];
            if (on_source_side(e.u) != on_source_side(e.v)) cut += x[k];
        }
        best = std::min(best, cut);
    }
    return best;
}

}  // namespace mfr
