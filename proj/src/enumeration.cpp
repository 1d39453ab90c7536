#include "mfr/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace mfr {

RadixProfile RadixProfile::from(const EdgeStateDistribution& dist) {
    RadixProfile prof;
    prof.radices.reserve(dist.edge_count());
    for (int k = 0; k < dist.edge_count(); ++k) {
        prof.radices.push_back(dist.max_state(k) + 1);
        prof.total *= static_cast<unsigned>(prof.radices.back());
    }
    return prof;
}

namespace {

// Path weight as a bitset over edge indices, compared numerically.
// Adding edge k sets bit k; a Dijkstra path never repeats an edge, so
// this is exact big-integer addition of the 2^(k-1) weights.
struct BitWeight {
    std::vector<std::uint64_t> words;

    explicit BitWeight(int m) : words((m + 63) / 64, 0) {}

    void set_bit(int k) { words[k / 64] |= std::uint64_t{1} << (k % 64); }

    bool operator<(const BitWeight& other) const {
        for (size_t i = words.size(); i-- > 0;) {
            if (words[i] != other.words[i]) return words[i] < other.words[i];
        }
        return false;
    }
};

}  // namespace

std::optional<FirstConnectedVector> find_first_connected_vector(
    const Network& net, const EdgeStateDistribution& dist) {
    const int m = net.edge_count();
    const int n = net.n;

    std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (neighbor, edge index)
    for (int k = 0; k < m; ++k) {
        if (dist.max_state(k) < 1) continue;  // dead edge, never connectable
        adj[net.edges[k].u].push_back({net.edges[k].v, k});
        adj[net.edges[k].v].push_back({net.edges[k].u, k});
    }

    // Label-setting shortest path; n is small enough for the quadratic
    // scan, and distances are bitsets rather than machine integers.
    std::vector<BitWeight> distance(n + 1, BitWeight(m));
    std::vector<int> parent_edge(n + 1, -1);
    std::vector<int> parent_vertex(n + 1, -1);
    std::vector<bool> reached(n + 1, false), settled(n + 1, false);
    reached[net.source()] = true;

    for (;;) {
        int best = -1;
        for (int v = 1; v <= n; ++v) {
            if (reached[v] && !settled[v] && (best == -1 || distance[v] < distance[best]))
                best = v;
        }
        if (best == -1) return std::nullopt;
        if (best == net.sink()) break;
        settled[best] = true;
        for (auto [w, k] : adj[best]) {
            if (settled[w]) continue;
            BitWeight candidate = distance[best];
            candidate.set_bit(k);
            if (!reached[w] || candidate < distance[w]) {
                reached[w] = true;
                distance[w] = candidate;
                parent_edge[w] = k;
                parent_vertex[w] = best;
            }
        }
    }

    FirstConnectedVector fc;
    fc.x_fc.assign(m, 0);
    for (int v = net.sink(); v != net.source(); v = parent_vertex[v])
        fc.x_fc[parent_edge[v]] = 1;
    fc.rank = mixed_radix_rank(fc.x_fc, RadixProfile::from(dist));
    return fc;
}

u128 mixed_radix_rank(const StateVector& x, const RadixProfile& prof) {
    if (x.size() != prof.radices.size())
        throw std::invalid_argument("state vector length does not match radix profile");
    u128 rank = 0;
    u128 place = 1;
    for (size_t k = 0; k < x.size(); ++k) {
        if (x[k] < 0 || x[k] >= prof.radices[k])
            throw std::out_of_range("state out of bounds at coordinate " + std::to_string(k + 1));
        rank += place * static_cast<unsigned>(x[k]);
        place *= static_cast<unsigned>(prof.radices[k]);
    }
    return rank;
}

StateVector unrank(u128 rank, const RadixProfile& prof) {
    if (rank >= prof.total) throw std::out_of_range("rank beyond state space");
    StateVector x(prof.radices.size());
    for (size_t k = 0; k < x.size(); ++k) {
        auto radix = static_cast<unsigned>(prof.radices[k]);
        x[k] = static_cast<int>(rank % radix);
        rank /= radix;
    }
    return x;
}

std::optional<StateVector> next_vector(const StateVector& x, const RadixProfile& prof) {
    StateVector out = x;
    for (size_t k = 0; k < out.size(); ++k) {
        if (out[k] + 1 < prof.radices[k]) {
            ++out[k];
            return out;
        }
        out[k] = 0;  // carry
    }
    return std::nullopt;
}

std::optional<StateVector> next_vector_binary_backward(const StateVector& x) {
    for (int s : x)
        if (s != 0 && s != 1) throw std::invalid_argument("binary successor requires 0/1 states");
    StateVector out = x;
    for (size_t k = out.size(); k-- > 0;) {
        if (out[k] == 0) {
            out[k] = 1;
            return out;
        }
        out[k] = 0;
    }
    return std::nullopt;
}

std::vector<std::pair<u128, u128>> partition_range(u128 start, u128 end, int parts) {
    if (start > end) throw std::invalid_argument("partition_range: start > end");
    if (parts < 1) throw std::invalid_argument("partition_range: parts must be >= 1");
    const u128 size = end - start;
    const u128 base = size / static_cast<unsigned>(parts);
    const u128 extra = size % static_cast<unsigned>(parts);

    std::vector<std::pair<u128, u128>> out;
    out.reserve(parts);
    u128 at = start;
    for (int i = 0; i < parts; ++i) {
        u128 len = base + (static_cast<unsigned>(i) < extra ? 1 : 0);
        out.push_back({at, at + len});
        at += len;
    }
    return out;
}

}  // namespace mfr
