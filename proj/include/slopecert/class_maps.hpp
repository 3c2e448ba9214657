#pragma once

/**
 * @file class_maps.hpp
 * @brief Slope maps of typed compatibility classes.
 *
 * A class map sends the slope of every member surface on T2 to its slope
 * on T1. With two member surfaces R, S of distinct slopes and boundary
 * classes r_i, s_i on T_i, it is Psi_1 Psi_2^{-1} with Psi_i = (r_i s_i);
 * the boundary-count relation between the two tori forces
 * det Psi_1 = det Psi_2, and inputs violating it are rejected. With a
 * single slope pair the map is a canonical integer matrix.
 */

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "slopecert/matrix.hpp"
#include "slopecert/normal_torus.hpp"

namespace slopecert {

using IntVec = Vec2<Integer>;

enum class Provenance { SingleSlope, TwoSurface, External };

constexpr std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::SingleSlope: return "single-slope";
    case Provenance::TwoSurface: return "two-surface";
    case Provenance::External: return "external";
    }
    return "external";
}

inline Provenance parse_provenance(std::string_view s) {
    if (s == "single-slope") return Provenance::SingleSlope;
    if (s == "two-surface") return Provenance::TwoSurface;
    if (s == "external") return Provenance::External;
    throw Error(ErrorKind::InvalidInput, "unknown provenance '" + std::string(s) + "'");
}

/// Boundary classes of the two surfaces a two-surface map was built from.
struct SurfacePair {
    IntVec r1, s1, r2, s2;
    friend bool operator==(const SurfacePair&, const SurfacePair&) = default;
};

struct ClassMap {
    UnimodularQ phi = UnimodularQ::identity();
    std::optional<std::pair<int, int>> type_pair; // (type on T1, type on T2)
    Integer complexity_bound = 0;
    Provenance provenance = Provenance::External;
    std::optional<SurfacePair> surfaces;

    static ClassMap external(UnimodularQ m) {
        ClassMap cm;
        cm.phi = std::move(m);
        return cm;
    }

    friend bool operator==(const ClassMap&, const ClassMap&) = default;
};

inline Integer det(const IntVec& u, const IntVec& v) { return u.x * v.y - u.y * v.x; }

inline Vec2<Rational> apply(const UnimodularQ& m, const IntVec& v) {
    return m.mat() * Vec2<Rational>{Rational(v.x), Rational(v.y)};
}

namespace detail {

// Smallest boundary type shared by the normal curves realising both classes.
inline std::optional<int> common_type(const IntVec& u, const IntVec& v) {
    auto tu = curve_types(from_slope(PrimitiveClass::from_vector(u.x, u.y).slope(), 1, 0));
    auto tv = curve_types(from_slope(PrimitiveClass::from_vector(v.x, v.y).slope(), 1, 0));
    for (int i : tu)
        for (int j : tv)
            if (i == j) return i;
    return std::nullopt;
}

} // namespace detail

/// Psi_1 Psi_2^{-1} from the boundary classes of two surfaces of one class.
inline ClassMap build_from_two_surfaces(const IntVec& r1, const IntVec& s1, const IntVec& r2, const IntVec& s2) {
    for (const IntVec* v : {&r1, &s1, &r2, &s2})
        require(v->x != 0 || v->y != 0, ErrorKind::InvalidInput, "boundary classes must be nonzero");
    const Integer d1 = det(r1, s1), d2 = det(r2, s2);
    require(d2 != 0, ErrorKind::DegenerateClass,
            "r2 and s2 are linearly dependent; build the map from a single slope pair instead");
    require(d1 == d2, ErrorKind::ViolatesBoundaryCount,
            "det(r1, s1) = " + d1.str() + " differs from det(r2, s2) = " + d2.str());

    // Psi_2^{-1} = (1/d) [[s2.y, -s2.x], [-r2.y, r2.x]].
    const Mat2<Rational> psi1{Rational(r1.x), Rational(s1.x), Rational(r1.y), Rational(s1.y)};
    const Mat2<Rational> psi2_inv{make_rational(s2.y, d2), make_rational(-s2.x, d2), make_rational(-r2.y, d2),
                                  make_rational(r2.x, d2)};

    ClassMap cm;
    cm.phi = UnimodularQ(psi1 * psi2_inv);
    cm.provenance = Provenance::TwoSurface;
    cm.surfaces = SurfacePair{r1, s1, r2, s2};
    auto t1 = detail::common_type(r1, s1), t2 = detail::common_type(r2, s2);
    if (t1 && t2) cm.type_pair = std::pair{*t1, *t2};
    return cm;
}

/**
 * Canonical completion of the primitive vector of s to a determinant-one
 * basis B = [[p, u], [q, v]] (p v - q u = 1).
 *
 * For p != 0 the complement is the unique one with 0 <= u < |p|; for
 * s = 0/1 it is (u, v) = (-1, 0).
 */
inline UnimodularZ basis_completion(const Slope& s) {
    const Integer &p = s.p(), &q = s.q();
    if (p == 0) return UnimodularZ(0, -1, 1, 0);
    // q u = -1 (mod |p|)
    Integer x, y;
    ext_gcd(q, abs(p), x, y); // q x + |p| y = 1
    Integer u = mod_floor(-x, p);
    Integer v = (1 + q * u) / p;
    return UnimodularZ(p, u, q, v);
}

/// The canonical integer map B_1 B_2^{-1} sending tau2 to tau1.
inline ClassMap build_from_single_slope(const Slope& tau1, const Slope& tau2) {
    UnimodularZ m = basis_completion(tau1) * basis_completion(tau2).inverse();
    ClassMap cm;
    cm.phi = UnimodularQ(m);
    cm.provenance = Provenance::SingleSlope;
    auto t1 = curve_types(from_slope(tau1, 1, 0)), t2 = curve_types(from_slope(tau2, 1, 0));
    cm.type_pair = std::pair{t1.front(), t2.front()};
    return cm;
}

struct ThirdSurfaceCheck {
    bool maps = false;                  // Phi q2 == q1
    std::optional<bool> det_against_r;  // det(Phi q2, r1) == det(q1, r1)
    std::optional<bool> det_against_s;  // det(Phi q2, s1) == det(q1, s1)

    explicit operator bool() const { return maps; }
};

/// Does the class map carry q2 to q1?
inline ThirdSurfaceCheck verify_third_surface(const ClassMap& cm, const IntVec& q1, const IntVec& q2) {
    ThirdSurfaceCheck out;
    const Vec2<Rational> image = slopecert::apply(cm.phi, q2);
    const Vec2<Rational> target{Rational(q1.x), Rational(q1.y)};
    out.maps = image == target;
    if (cm.surfaces) {
        auto det_q = [](const Vec2<Rational>& u, const IntVec& v) { return u.x * v.y - u.y * v.x; };
        out.det_against_r = det_q(image, cm.surfaces->r1) == det_q(target, cm.surfaces->r1);
        out.det_against_s = det_q(image, cm.surfaces->s1) == det_q(target, cm.surfaces->s1);
    }
    return out;
}

struct ClassCountBound {
    Integer bound;
    bool degenerate; // t = 0: no triangulation has zero tetrahedra
};

/// Upper bound 3^2 * 3^t on typed compatibility classes of complexity zero
/// in a triangulation with t tetrahedra.
inline ClassCountBound class_count_bound(unsigned t) {
    Integer b = 9;
    for (unsigned i = 0; i < t; ++i) b *= 3;
    return {b, t == 0};
}

} // namespace slopecert
