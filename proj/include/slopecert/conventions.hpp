#pragma once

// Conventions that change the meaning of emitted numbers. The hash goes into
// --version so certificates from different builds can be compared.

#include <array>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>

namespace slopecert {

inline constexpr std::string_view kVersion = "0.1.0";

inline constexpr std::array<std::pair<std::string_view, std::string_view>, 7> kConventions{{
    {"slope", "p/q with gcd 1 and q > 0; infinity is 1/0"},
    {"homology-basis", "horizontal loop (1,0), vertical loop (0,1); class (p,q) has slope p/q"},
    {"action", "[[a,b],[c,d]] sends p/q to (ap+bq)/(cp+dq)"},
    {"edges", "e1 horizontal, e2 vertical, e3 diagonal y=x of the unit square"},
    {"arc-labeling", "type i misses edge i; coordinates (x1,x2,x3) count type 1,2,3 arcs per triangle"},
    {"basis-completion", "p/q -> [[p,u],[q,v]], pv-qu=1, 0<=u<|p|; 0/1 -> [[0,-1],[1,0]]"},
    {"normal-sign", "+1 when the ccw boundary direction on the shared edge runs from the second curve to the first"},
}};

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string conventions_hash() {
    std::uint64_t h = 14695981039346656037ull;
    for (const auto& [k, v] : kConventions) {
        h = fnv1a64(k, h);
        h = fnv1a64("=", h);
        h = fnv1a64(v, h);
        h = fnv1a64("\n", h);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

} // namespace slopecert
