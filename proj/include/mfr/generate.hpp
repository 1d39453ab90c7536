#pragma once

#include <cstdint>

#include "mfr/network.hpp"

namespace mfr {

struct GenerateOptions {
    int n = 4;
    int m = 5;
    int max_state = 2;
    std::uint64_t seed = 1;
    bool random_dist = false;  // false = uniform over 0..max_state
};

// Random connected simple network, deterministic per seed. A spanning
// tree guarantees connectivity; the remaining edges are drawn from the
// unused vertex pairs. Throws if m is outside [n-1, n(n-1)/2].
ParsedNetwork generate_network(const GenerateOptions& options);

}  // namespace mfr
