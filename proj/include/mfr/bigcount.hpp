#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mfr {

// State-space sizes (e.g. 5^14) overflow 32 bits quickly and the vector
// counters are specified up to 2^127, so ranks and totals are 128-bit.
using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

inline u128 u128_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer string");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer string: " + s);
        v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
}

}  // namespace mfr
