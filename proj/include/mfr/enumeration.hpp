#pragma once

#include <optional>
#include <vector>

#include "mfr/bigcount.hpp"
#include "mfr/network.hpp"

namespace mfr {

// Radices of the enumeration counter: radices[k] = max_state(k) + 1.
struct RadixProfile {
    std::vector<int> radices;
    u128 total = 1;

    static RadixProfile from(const EdgeStateDistribution& dist);
};

struct FirstConnectedVector {
    StateVector x_fc;
    u128 rank = 0;
};

// The earliest connected vector in counting order. Its support is the
// minimum-weight s-t path under edge weights 2^(k-1); every vector of
// smaller rank is disconnected. Weights are compared as big integers
// (bitsets over edge indices), so m > 63 is safe, and the optimum is
// unique because distinct edge sets have distinct power-of-two sums.
// Returns nullopt when no s-t path survives among edges with
// max_state >= 1 (the network is effectively disconnected).
std::optional<FirstConnectedVector> find_first_connected_vector(
    const Network& net, const EdgeStateDistribution& dist);

// Position of x in counting order: coordinate 1 is least significant.
u128 mixed_radix_rank(const StateVector& x, const RadixProfile& prof);

StateVector unrank(u128 rank, const RadixProfile& prof);

// Counting-order successor (coordinate 1 increments first, carries
// propagate upward); nullopt after the all-max vector.
std::optional<StateVector> next_vector(const StateVector& x, const RadixProfile& prof);

// Binary successor with the LAST coordinate incrementing first; the
// visiting order of the original binary scheme. All radices must be 2.
std::optional<StateVector> next_vector_binary_backward(const StateVector& x);

// Splits [start, end) into `parts` contiguous half-open intervals with
// sizes differing by at most one. Empty intervals are kept so the
// result always has exactly `parts` entries.
std::vector<std::pair<u128, u128>> partition_range(u128 start, u128 end, int parts);

}  // namespace mfr
