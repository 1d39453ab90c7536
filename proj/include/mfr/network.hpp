#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mfr {

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u = 0;
    int v = 0;
};

// Undirected simple graph, vertices 1..n, source = 1, sink = n.
// Edge k of `edges` is a_{k+1} in the usual 1-based labeling.
struct Network {
    int n = 0;
    std::vector<Edge> edges;

    int source() const { return 1; }
    int sink() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Per-edge probability table: dist[k][s] = Pr(state of a_k is s),
// s = 0..max_state(k).
struct EdgeStateDistribution {
    std::vector<std::vector<double>> p;

    int max_state(int k) const { return static_cast<int>(p[k].size()) - 1; }
    int edge_count() const { return static_cast<int>(p.size()); }
};

using StateVector = std::vector<int>;

// Throws ValidationError on self-loops, parallel edges, bad vertex
// labels, or probability rows that do not sum to 1 within 1e-9
// (unless normalize is set, which rescales).
void validate(const Network& net, const EdgeStateDistribution& dist);

// Sorts edges by (min(u,v), max(u,v)) and permutes the distribution
// rows alongside. Idempotent.
void canonicalize(Network& net, EdgeStateDistribution& dist);

struct ParsedNetwork {
    Network net;
    EdgeStateDistribution dist;
};

// Document format:
//   {"n": int, "edges": [[u,v],...], "dist": [[p0,p1,...],...],
//    "preserve_order": bool (optional), "normalize": bool (optional)}
ParsedNetwork parse_network(const std::string& text);
std::string serialize_network(const Network& net, const EdgeStateDistribution& dist);

EdgeStateDistribution uniform_distribution(const Network& net, int max_state);

double pr_vector(const StateVector& x, const EdgeStateDistribution& dist);

std::string format_state_vector(const StateVector& x);

}  // namespace mfr
