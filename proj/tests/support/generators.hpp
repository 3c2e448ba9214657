#pragma once

// Hand-rolled random generators for property tests. All seeded, so every
// failure reproduces.

#include <cstdint>
#include <numeric>
#include <random>

#include "slopecert/class_maps.hpp"
#include "slopecert/matrix.hpp"
#include "slopecert/slope.hpp"

namespace slopecert::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Slope random_slope(Rng& rng, std::int64_t h) {
    for (;;) {
        std::int64_t p = uniform(rng, -h, h), q = uniform(rng, 0, h);
        if (std::gcd(p, q) == 1) return Slope::normalize(p, q);
    }
}

/// Product of random elementary matrices; entries grow with `steps`.
inline UnimodularZ random_sl2z(Rng& rng, int steps = 6, std::int64_t k = 3) {
    UnimodularZ m = UnimodularZ::identity();
    for (int i = 0; i < steps; ++i) {
        std::int64_t t = uniform(rng, -k, k);
        m = m * (uniform(rng, 0, 1) ? UnimodularZ(1, t, 0, 1) : UnimodularZ(1, 0, t, 1));
    }
    if (uniform(rng, 0, 1)) m = m * UnimodularZ(-1, 0, 0, -1);
    return m;
}

inline Rational random_rational(Rng& rng, std::int64_t num_max, std::int64_t den_max) {
    return Rational(uniform(rng, -num_max, num_max), uniform(rng, 1, den_max));
}

/// a, b, c random with a != 0, then d = (1 + bc)/a.
inline UnimodularQ random_sl2q(Rng& rng, std::int64_t num_max = 9, std::int64_t den_max = 12) {
    Rational a;
    do a = random_rational(rng, num_max, den_max);
    while (a == 0);
    Rational b = random_rational(rng, num_max, den_max), c = random_rational(rng, num_max, den_max);
    return UnimodularQ(a, b, c, (1 + b * c) / a);
}

/// Conjugate of diag(lambda, 1/lambda) by a random integer matrix: two
/// rational eigenslopes by construction.
inline UnimodularQ random_split_sl2q(Rng& rng) {
    Rational lambda;
    do lambda = random_rational(rng, 6, 6);
    while (lambda == 0);
    UnimodularQ diag(lambda, 0, 0, 1 / lambda);
    UnimodularZ p = random_sl2z(rng, 3, 2);
    return compose(compose(UnimodularQ(p), diag), UnimodularQ(p.inverse()));
}

/// Conjugate of a rational shear: exactly one fixed slope (or all of them).
inline UnimodularQ random_parabolic_sl2q(Rng& rng) {
    Rational t = random_rational(rng, 6, 6);
    Rational sign = uniform(rng, 0, 1) ? 1 : -1;
    UnimodularQ shear(sign, t, 0, sign);
    UnimodularZ p = random_sl2z(rng, 3, 2);
    return compose(compose(UnimodularQ(p), shear), UnimodularQ(p.inverse()));
}

/// A mix of the above plus +-I, weighted toward the generic case.
inline UnimodularQ random_mixed_sl2q(Rng& rng) {
    switch (uniform(rng, 0, 9)) {
    case 0:
    case 1: return random_split_sl2q(rng);
    case 2: return random_parabolic_sl2q(rng);
    case 3: return uniform(rng, 0, 1) ? UnimodularQ::identity() : UnimodularQ(-1, 0, 0, -1);
    default: return random_sl2q(rng);
    }
}

inline IntVec random_vec(Rng& rng, std::int64_t h) {
    for (;;) {
        IntVec v{uniform(rng, -h, h), uniform(rng, -h, h)};
        if (v.x != 0 || v.y != 0) return v;
    }
}

// Random valid input: Psi_2 with nonzero det D, then r1 = m * (primitive w)
// for a divisor m of D and s1 = (D/m) * w' + k w, where (w, w') is a
// determinant-one basis. Psi_1 Psi_2^{-1} is usually not integral.
inline SurfacePair random_surfaces(Rng& rng) {
    for (;;) {
        IntVec r2 = random_vec(rng, 9), s2 = random_vec(rng, 9);
        Integer d = det(r2, s2);
        if (d == 0) continue;
        std::vector<Integer> divisors;
        for (Integer m = 1; m <= abs(d); ++m)
            if (d % m == 0) divisors.push_back(m);
        Integer m = divisors[uniform(rng, 0, static_cast<std::int64_t>(divisors.size()) - 1)];
        Slope w = random_slope(rng, 7);
        Integer wp = w.p(), wq = w.q();
        if (uniform(rng, 0, 1)) wp = -wp, wq = -wq;
        Integer u, v;
        ext_gcd(wp, wq, v, u); // p v + q u = 1
        u = -u;                // p v - q u = 1
        std::int64_t k = uniform(rng, -3, 3);
        IntVec r1{m * wp, m * wq};
        IntVec s1{(d / m) * u + k * wp, (d / m) * v + k * wq};
        return {r1, s1, r2, s2};
    }
}

} // namespace slopecert::testing
