#pragma once

/**
 * @file normal_torus.hpp
 * @brief Normal curves on the one-vertex triangulation of the torus.
 *
 * Model. The torus is the unit square with opposite sides identified and
 * its single vertex at the corner. The three edges are
 *
 *     e1  horizontal  (y = 0 ~ y = 1)
 *     e2  vertical    (x = 0 ~ x = 1)
 *     e3  diagonal    (y = x)
 *
 * and the two triangles are the lower-right half L = {y < x} and the
 * upper-left half U = {y > x}. A normal arc of type i is the arc that
 * misses edge i, i.e. cuts off the corner opposite edge i:
 *
 *     type   in L (corner)            in U (corner)
 *      1     e2-e3 at (1,1)           e2-e3 at (0,0)
 *      2     e1-e3 at (0,0)           e1-e3 at (1,1)
 *      3     e1-e2 at (1,0)           e1-e2 at (0,1)
 *
 * The second triangle's coordinates equal the first's, so a curve is the
 * triple (x1, x2, x3). Homology basis: the horizontal loop is (1, 0) and
 * the vertical loop is (0, 1); the class (p, q) has slope p/q.
 *
 * Slopes by type, after removing the min(x) vertex links:
 *
 *     (0, b, c)  type 1   slope  c / (b + c)     in [0, 1]
 *     (a, 0, c)  type 2   slope  (a + c) / c     in [1, 1/0]
 *     (a, b, 0)  type 3   slope  -a / b          in [1/0, 0]
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slopecert/arith.hpp"
#include "slopecert/slope.hpp"

namespace slopecert {

struct NormalCoordinates {
    Integer x1, x2, x3;

    NormalCoordinates() = default;
    NormalCoordinates(Integer a, Integer b, Integer c) : x1(std::move(a)), x2(std::move(b)), x3(std::move(c)) {
        require(x1 >= 0 && x2 >= 0 && x3 >= 0, ErrorKind::InvalidInput,
                "normal coordinates must be non-negative");
    }

    const Integer& operator[](int i) const { return i == 1 ? x1 : (i == 2 ? x2 : x3); }

    Integer min() const {
        Integer m = x1 < x2 ? x1 : x2;
        return m < x3 ? m : x3;
    }

    /// Edge weights: how often the curve crosses e1, e2 and e3.
    std::array<Integer, 3> edge_weights() const { return {x2 + x3, x1 + x3, x1 + x2}; }

    friend NormalCoordinates operator+(const NormalCoordinates& l, const NormalCoordinates& r) {
        return {l.x1 + r.x1, l.x2 + r.x2, l.x3 + r.x3};
    }
    friend bool operator==(const NormalCoordinates&, const NormalCoordinates&) = default;

    std::string str() const { return x1.str() + "," + x2.str() + "," + x3.str(); }
};

/// Parses "x1,x2,x3".
inline NormalCoordinates parse_normal_coordinates(std::string_view text) {
    std::array<Integer, 3> v;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        auto comma = text.find(',', start);
        require((i < 2) == (comma != std::string_view::npos), ErrorKind::InvalidInput,
                "normal coordinates must be three comma-separated naturals: '" + std::string(text) + "'");
        v[i] = parse_integer(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        start = comma + 1;
    }
    return {v[0], v[1], v[2]};
}

/// Indices i in {1,2,3} with x_i minimal.
inline std::vector<int> curve_types(const NormalCoordinates& x) {
    Integer m = x.min();
    std::vector<int> out;
    for (int i = 1; i <= 3; ++i)
        if (x[i] == m) out.push_back(i);
    return out;
}

inline bool share_type(const NormalCoordinates& x, const NormalCoordinates& y) {
    for (int i : curve_types(x))
        for (int j : curve_types(y))
            if (i == j) return true;
    return false;
}

struct CurveDecomposition {
    std::optional<Slope> essential_slope;
    Integer essential_multiplicity = 0;
    Integer trivial_count = 0;

    friend bool operator==(const CurveDecomposition&, const CurveDecomposition&) = default;
};

inline CurveDecomposition decompose(const NormalCoordinates& x) {
    CurveDecomposition out;
    out.trivial_count = x.min();
    const Integer a = x.x1 - out.trivial_count;
    const Integer b = x.x2 - out.trivial_count;
    const Integer c = x.x3 - out.trivial_count;
    if (a == 0 && b == 0 && c == 0) return out;

    Integer p, q;
    if (a == 0) {        // type 1
        p = c;
        q = b + c;
    } else if (b == 0) { // type 2
        p = a + c;
        q = c;
    } else {             // type 3
        p = -a;
        q = b;
    }
    out.essential_multiplicity = gcd(gcd(a, b), c);
    out.essential_slope = Slope::normalize(p, q);
    return out;
}

inline Slope slope_of(const NormalCoordinates& x) {
    auto dec = decompose(x);
    require(dec.essential_slope.has_value(), ErrorKind::NoEssentialComponent,
            "normal curve (" + x.str() + ") has no essential component");
    return *dec.essential_slope;
}

/// Minimal coordinates of mult parallel copies of s plus `trivial` vertex links.
inline NormalCoordinates from_slope(const Slope& s, const Integer& mult, const Integer& trivial) {
    require(mult >= 1, ErrorKind::InvalidInput, "multiplicity must be at least 1");
    require(trivial >= 0, ErrorKind::InvalidInput, "trivial count must be non-negative");
    const Integer &p = s.p(), &q = s.q();
    NormalCoordinates base;
    if (p <= 0) {
        base = {-p, q, 0};        // [-inf, 0]
    } else if (p <= q) {
        base = {0, q - p, p};     // (0, 1]
    } else {
        base = {p - q, 0, q};     // (1, 1/0], with 1/0 = (1, 0) giving (1, 0, 0)
    }
    return {base.x1 * mult + trivial, base.x2 * mult + trivial, base.x3 * mult + trivial};
}

// ---------------------------------------------------------------------------
// Normal signs of intersection points.

enum class Triangle { Lower, Upper };

struct IntersectionPoint {
    Triangle triangle;
    int alpha_type; // arc type of x's arc through the point
    int beta_type;  // arc type of y's arc through the point
    int sign;       // +1 or -1
};

struct SignedIntersections {
    Integer positives = 0;
    Integer negatives = 0;
    std::vector<IntersectionPoint> points;

    Integer algebraic() const { return positives - negatives; }
    Integer total() const { return positives + negatives; }
};

namespace detail {

inline Rational frac(const Rational& r) { return r - floor_div(num(r), den(r)); }

// Closed straight geodesics q*X - p*Y = c (mod 1), one per offset.
struct LineFamily {
    Integer p, q;
    std::vector<Rational> offsets;
};

// Where the lines cross edge e, as that edge's own parameter in (0, 1):
// X along e1 (y = 0), Y along e2 (x = 0), t along e3 (the point (t, t)).
inline std::vector<Rational> edge_positions(const LineFamily& f, int e) {
    // e1: q X = c;  e2: -p Y = c;  e3: (q - p) t = c   (all mod 1)
    const Integer coeff = e == 1 ? f.q : (e == 2 ? Integer(-f.p) : Integer(f.q - f.p));
    std::vector<Rational> out;
    const Integer n = abs(coeff);
    for (const Rational& c : f.offsets)
        for (Integer j = 0; j < n; ++j) out.push_back(frac((c + j) / coeff));
    std::sort(out.begin(), out.end());
    return out;
}

struct Arc {
    int type;
    std::int64_t u1, u2; // boundary coordinates, u1 < u2
    int edge1, edge2;    // edges of the two ends (matching u1, u2)
};

// Normal arcs of a curve with essential coordinates w inside one triangle,
// nested around their corners; `coord(e, i)` is the boundary coordinate of
// the curve's i-th point (ascending edge parameter) on edge e.
template <typename Coord>
std::vector<Arc> triangle_arcs(const std::array<std::int64_t, 4>& w, const std::array<std::int64_t, 4>& n,
                               Triangle tri, Coord coord) {
    std::vector<Arc> arcs;
    auto add = [&](int type, int ea, std::int64_t ia, int eb, std::int64_t ib) {
        std::int64_t ua = coord(ea, ia), ub = coord(eb, ib);
        if (ua < ub) arcs.push_back({type, ua, ub, ea, eb});
        else arcs.push_back({type, ub, ua, eb, ea});
    };
    for (std::int64_t i = 0; i < w[1]; ++i)
        tri == Triangle::Lower ? add(1, 2, n[2] - 1 - i, 3, n[3] - 1 - i) : add(1, 2, i, 3, i);
    for (std::int64_t i = 0; i < w[2]; ++i)
        tri == Triangle::Lower ? add(2, 1, i, 3, i) : add(2, 1, n[1] - 1 - i, 3, n[3] - 1 - i);
    for (std::int64_t i = 0; i < w[3]; ++i)
        tri == Triangle::Lower ? add(3, 1, n[1] - 1 - i, 2, i) : add(3, 2, n[2] - 1 - i, 1, i);
    return arcs;
}

inline std::array<std::int64_t, 4> essential_weights(const CurveDecomposition& d) {
    NormalCoordinates c = from_slope(*d.essential_slope, d.essential_multiplicity, 0);
    return {0, static_cast<std::int64_t>(c.x1), static_cast<std::int64_t>(c.x2), static_cast<std::int64_t>(c.x3)};
}

} // namespace detail

/**
 * Normal signs of all intersection points of x and y in minimal position.
 *
 * Each essential component is realised as a closed straight geodesic of the
 * flat square torus. Straight lines cross every edge transversally and
 * never twice in one triangle, so they are normal curves with the expected
 * coordinates; distinct slopes meet exactly |det| times and parallel copies
 * are disjoint, which is minimal position. Vertex links shrink into a
 * neighbourhood of the vertex that no line enters and meet nothing.
 *
 * Only the order of the crossing points along each edge matters: inside a
 * triangle the arcs are straight chords, two chords cross iff their ends
 * interleave around the boundary, and the sign compares the two ends on a
 * shared edge against the counter-clockwise boundary direction.
 */
inline SignedIntersections normal_sign_intersections(const NormalCoordinates& x, const NormalCoordinates& y) {
    SignedIntersections out;
    const auto dx = decompose(x), dy = decompose(y);
    if (!dx.essential_slope || !dy.essential_slope || *dx.essential_slope == *dy.essential_slope) return out;

    const auto wa = detail::essential_weights(dx), wb = detail::essential_weights(dy);
    const std::array<std::int64_t, 4> na{0, wa[2] + wa[3], wa[1] + wa[3], wa[1] + wa[2]};
    const std::array<std::int64_t, 4> nb{0, wb[2] + wb[3], wb[1] + wb[3], wb[1] + wb[2]};

    // x's lines get offsets in (0, 1/2) and y's in (1/2, 1); if two crossing
    // points coincide on an edge, change the jitter and try again.
    static const std::array<Rational, 6> jitters{Rational(1, 2), Rational(1, 3), Rational(2, 7),
                                                 Rational(3, 11), Rational(5, 13), Rational(7, 17)};
    auto family = [](const CurveDecomposition& d, const Rational& lo, const Rational& jitter) {
        detail::LineFamily f{d.essential_slope->p(), d.essential_slope->q(), {}};
        const Integer& m = d.essential_multiplicity;
        for (Integer k = 0; k < m; ++k) f.offsets.push_back(lo + (Rational(k) + jitter) / (2 * m));
        return f;
    };

    for (std::size_t attempt = 0; attempt < jitters.size() * jitters.size(); ++attempt) {
        auto fa = family(dx, 0, jitters[attempt % jitters.size()]);
        auto fb = family(dy, Rational(1, 2), jitters[attempt / jitters.size()]);

        // Global rank of every crossing point along each edge.
        std::array<std::vector<std::int64_t>, 4> rank_a, rank_b;
        std::int64_t span = 1;
        bool degenerate = false;
        for (int e = 1; e <= 3 && !degenerate; ++e) {
            auto pa = detail::edge_positions(fa, e), pb = detail::edge_positions(fb, e);
            require(static_cast<std::int64_t>(pa.size()) == na[e] && static_cast<std::int64_t>(pb.size()) == nb[e],
                    ErrorKind::InvalidInput, "straight-line realisation disagrees with normal coordinates");
            std::size_t i = 0, j = 0;
            std::int64_t r = 0;
            while (i < pa.size() || j < pb.size()) {
                if (i < pa.size() && j < pb.size() && pa[i] == pb[j]) {
                    degenerate = true;
                    break;
                }
                if (j == pb.size() || (i < pa.size() && pa[i] < pb[j])) rank_a[e].push_back(r++), ++i;
                else rank_b[e].push_back(r++), ++j;
            }
            span = std::max(span, r + 1);
        }
        if (degenerate) continue;

        for (Triangle tri : {Triangle::Lower, Triangle::Upper}) {
            // Counter-clockwise boundary coordinate of the rank-r point on edge e.
            // L: e1 (0,0)->(1,0), e2 (1,0)->(1,1), e3 (1,1)->(0,0)
            // U: e3 (0,0)->(1,1), e1 (1,1)->(0,1), e2 (0,1)->(0,0)
            auto boundary = [&](int e, std::int64_t r) -> std::int64_t {
                if (tri == Triangle::Lower) {
                    if (e == 1) return r;
                    if (e == 2) return span + r;
                    return 3 * span - 1 - r;
                }
                if (e == 3) return r;
                if (e == 1) return 2 * span - 1 - r;
                return 3 * span - 1 - r;
            };
            auto arcs_a = detail::triangle_arcs(wa, na, tri, [&](int e, std::int64_t i) { return boundary(e, rank_a[e][i]); });
            auto arcs_b = detail::triangle_arcs(wb, nb, tri, [&](int e, std::int64_t i) { return boundary(e, rank_b[e][i]); });

            for (const auto& a : arcs_a) {
                for (const auto& b : arcs_b) {
                    bool in1 = a.u1 < b.u1 && b.u1 < a.u2;
                    bool in2 = a.u1 < b.u2 && b.u2 < a.u2;
                    if (in1 == in2) continue;
                    // Ends on a shared edge; positive when the boundary
                    // direction runs from y's end to x's end.
                    std::int64_t ua = 0, ub = 0;
                    bool found = false;
                    for (auto [ea, ca] : {std::pair{a.edge1, a.u1}, std::pair{a.edge2, a.u2}})
                        for (auto [eb, cb] : {std::pair{b.edge1, b.u1}, std::pair{b.edge2, b.u2}})
                            if (!found && ea == eb) {
                                ua = ca;
                                ub = cb;
                                found = true;
                            }
                    int sign = ua > ub ? 1 : -1;
                    (sign > 0 ? out.positives : out.negatives) += 1;
                    out.points.push_back({tri, a.type, b.type, sign});
                }
            }
        }
        return out;
    }
    throw Error(ErrorKind::InvalidInput, "could not place curves in general position");
}

} // namespace slopecert
