#pragma once

/**
 * @file farey.hpp
 * @brief Distances and geodesics in the Farey graph of a torus.
 *
 * The distance from s to t is computed by moving s to 1/0 with an SL_2(Z)
 * isometry and measuring the distance from 1/0 to the image of t.
 *
 * Distance from 1/0 to a non-integer x: every path must pass through
 * floor(x) or floor(x)+1 (the edge between them separates x from 1/0), so
 *
 *     d(inf, x) = 1 + min(d(n, x), d(n + 1, x)).
 *
 * Moving n (resp. n + 1) back to 1/0 turns both branches into a distance
 * from 1/0 to a number whose continued fraction is a tail of x's, possibly
 * with the leading partial quotient decreased by one. Reducing x modulo 1
 * and reflecting x -> 1 - x (both isometries fixing 1/0) leaves a state
 * [0; k, a_j, ..., a_m] with k >= 2; G(k, j) below is its distance. A long
 * run of equal branches collapses to the closed form
 *
 *     G(k, j) = min(1 + A_j, G(2, j) + k - 2),
 *
 * so the whole computation is linear in the number of partial quotients.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "slopecert/matrix.hpp"
#include "slopecert/slope.hpp"

namespace slopecert {

using FareyPath = std::vector<Slope>;

inline bool is_edge(const Slope& s, const Slope& t) { return intersection_number(s, t) == 1; }

/// An SL_2(Z) matrix carrying s to 1/0.
inline UnimodularZ isometry_to_infinity(const Slope& s) {
    Integer x, y;
    ext_gcd(s.p(), s.q(), x, y); // p x + q y = 1
    // B = [[p, -y], [q, x]] has det 1 and B (1, 0) = (p, q); return B^-1.
    return UnimodularZ(x, y, -s.q(), s.p());
}

namespace detail {

// Partial quotients of b/q for 0 < b < q (q >= 2): [0; a_1, ..., a_m], a_m >= 2.
inline std::vector<Integer> partial_quotients(Integer b, Integer q) {
    std::vector<Integer> out;
    while (b != 0) {
        out.push_back(q / b);
        Integer r = q % b;
        q = std::move(b);
        b = std::move(r);
    }
    return out;
}

} // namespace detail

/// Distance in the Farey graph from 1/0 to x.
inline std::int64_t distance_from_infinity(const Slope& x) {
    if (x.q() == 0) return 0;
    if (x.q() == 1) return 1;

    Integer a = mod_floor(x.p(), x.q());
    Integer b = std::min(a, Integer(x.q() - a));
    std::vector<Integer> cf = detail::partial_quotients(b, x.q()); // cf[i] = a_{i+1}
    const std::size_t m = cf.size();

    // Indexed by tail start j in [1, m + 1] (1-based; slot 0 unused).
    std::vector<std::int64_t> tail_dist(m + 3, 0); // A_j
    std::vector<std::int64_t> g2(m + 3, 0);        // G(2, j)

    auto G = [&](const Integer& k, std::size_t j) -> std::int64_t {
        if (k == 2) return g2[j];
        Integer via_fan = Integer(g2[j]) + k - 2;
        Integer via_tail = Integer(tail_dist[j]) + 1;
        return static_cast<std::int64_t>(via_fan < via_tail ? via_fan : via_tail);
    };
    auto quotient = [&](std::size_t j) -> const Integer& { return cf[j - 1]; };

    for (std::size_t j = m + 1; j >= 2; --j) {
        std::int64_t decreased; // d(inf, [0; 1, a_j, ...]) reflected
        if (j == m + 1) {
            tail_dist[j] = 1;
            decreased = 1;
        } else {
            tail_dist[j] = quotient(j) >= 2 ? G(quotient(j), j + 1) : G(quotient(j + 1) + 1, j + 2);
            decreased = G(quotient(j) + 1, j + 1);
        }
        g2[j] = 1 + std::min(tail_dist[j], decreased);
    }
    return G(quotient(1), 2);
}

/// Graph distance between two slopes.
inline std::int64_t distance(const Slope& s, const Slope& t) {
    if (s == t) return 0;
    return distance_from_infinity(lft_apply(isometry_to_infinity(s), t));
}

/**
 * A shortest path from s to t; among all shortest paths, the
 * lexicographically smallest sequence of slopes.
 *
 * Built greedily: after moving the current vertex to 1/0, any geodesic
 * continues through floor(t') or floor(t') + 1, so only those two
 * candidates need checking at each step.
 */
inline FareyPath geodesic(const Slope& s, const Slope& t) {
    FareyPath path{s};
    Slope cur = s;
    std::int64_t remaining = distance(s, t);
    while (remaining > 1) {
        UnimodularZ to_inf = isometry_to_infinity(cur);
        UnimodularZ back = to_inf.inverse();
        Slope image = lft_apply(to_inf, t);
        Integer n = floor_div(image.p(), image.q());

        std::optional<Slope> best;
        for (const Integer& k : {n, Integer(n + 1)}) {
            Slope cand = lft_apply(back, Slope::integer(k));
            if (distance(cand, t) == remaining - 1 && (!best || cand < *best)) best = cand;
        }
        cur = *best;
        path.push_back(cur);
        --remaining;
    }
    if (remaining == 1) path.push_back(t);
    return path;
}

/// True iff consecutive vertices are Farey neighbours and no vertex repeats.
inline bool is_valid_path(const FareyPath& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!is_edge(path[i], path[i + 1])) return false;
    FareyPath sorted = path;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

} // namespace slopecert
