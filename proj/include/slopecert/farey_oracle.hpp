#pragma once

/**
 * @file farey_oracle.hpp
 * @brief Breadth-first search on the finite piece of the Farey graph with
 *        |p|, |q| <= bound.
 *
 * Shares nothing with farey.hpp beyond the Slope type. The subgraph
 * distance is an upper bound on the true distance and equals it whenever
 * some geodesic stays inside the bound.
 */

#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "slopecert/slope.hpp"

namespace slopecert {

class FareyBall {
public:
    explicit FareyBall(std::int64_t bound) : bound_(bound) {
        require(bound >= 1, ErrorKind::InvalidInput, "search bound must be positive");
        add(1, 0);
        for (std::int64_t q = 1; q <= bound_; ++q)
            for (std::int64_t p = -bound_; p <= bound_; ++p)
                if (std::gcd(p, q) == 1) add(p, q);
    }

    std::int64_t bound() const noexcept { return bound_; }
    std::size_t size() const noexcept { return verts_.size(); }

    std::optional<std::size_t> index_of(const Slope& s) const {
        if (s.height() > bound_) return std::nullopt;
        auto it = index_.find(key(static_cast<std::int64_t>(s.p()), static_cast<std::int64_t>(s.q())));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Slope slope(std::size_t i) const { return Slope::normalize(verts_[i].first, verts_[i].second); }

    /// Single-source distances; -1 marks vertices unreachable inside the ball.
    std::vector<std::int64_t> distances_from(std::size_t src) const {
        std::vector<std::int64_t> dist(verts_.size(), -1);
        std::deque<std::size_t> queue{src};
        dist[src] = 0;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : neighbours(v)) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
        return dist;
    }

    /// Neighbours of vertex v inside the ball.
    ///
    /// Solutions of p*s - q*r = 1 form the family (r0 + k p, s0 + k q):
    /// one base neighbour plus repeated mediants with p/q.
    std::vector<std::size_t> neighbours(std::size_t v) const {
        auto [p, q] = verts_[v];
        std::vector<std::size_t> out;
        if (q == 0) {
            for (std::int64_t r = -bound_; r <= bound_; ++r) out.push_back(index_.at(key(r, 1)));
            return out;
        }
        // p*s0 - q*r0 = 1 from the extended gcd of (p, q).
        auto [g, x, y] = egcd(p, q); // p x + q y = 1
        std::int64_t s0 = x, r0 = -y;
        // Keep |s0 + k q| <= bound.
        std::int64_t kmin = floor_div64(-bound_ - s0, q) - 1, kmax = floor_div64(bound_ - s0, q) + 1;
        for (std::int64_t k = kmin; k <= kmax; ++k) {
            std::int64_t r = r0 + k * p, s = s0 + k * q;
            if (s < 0 || (s == 0 && r < 0)) { r = -r; s = -s; }
            if (s > bound_ || r > bound_ || r < -bound_) continue;
            out.push_back(index_.at(key(r, s)));
        }
        return out;
    }

private:
    static std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
        std::int64_t qt = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --qt;
        return qt;
    }

    static std::tuple<std::int64_t, std::int64_t, std::int64_t> egcd(std::int64_t a, std::int64_t b) {
        std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            std::int64_t qt = old_r / r;
            std::int64_t tmp = old_r - qt * r; old_r = r; r = tmp;
            tmp = old_s - qt * s; old_s = s; s = tmp;
            tmp = old_t - qt * t; old_t = t; t = tmp;
        }
        if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
        return {old_r, old_s, old_t};
    }

    std::int64_t key(std::int64_t p, std::int64_t q) const { return p * (2 * bound_ + 3) + q; }

    void add(std::int64_t p, std::int64_t q) {
        index_.emplace(key(p, q), verts_.size());
        verts_.emplace_back(p, q);
    }

    std::int64_t bound_;
    std::vector<std::pair<std::int64_t, std::int64_t>> verts_;
    std::unordered_map<std::int64_t, std::size_t> index_;
};

/// BFS distance from s to t within the ball of the given bound, or nullopt
/// when t is not reachable inside it.
inline std::optional<std::int64_t> bfs_distance_oracle(const Slope& s, const Slope& t, std::int64_t bound) {
    FareyBall ball(bound);
    auto si = ball.index_of(s), ti = ball.index_of(t);
    require(si && ti, ErrorKind::InvalidInput, "slopes must lie within the search bound");
    std::int64_t d = ball.distances_from(*si)[*ti];
    if (d < 0) return std::nullopt;
    return d;
}

} // namespace slopecert
