#pragma once

/**
 * @file matrix.hpp
 * @brief 2x2 matrices over Z and Q with determinant one, and their
 *        linear-fractional action on slopes.
 *
 * Mat2<T> is a plain value type. UnimodularZ and UnimodularQ wrap it and
 * check det = 1 on construction; every operation that returns one of them
 * preserves the invariant by construction.
 */

#include <algorithm>
#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "slopecert/arith.hpp"
#include "slopecert/slope.hpp"

namespace slopecert {

template <typename T>
struct Vec2 {
    T x{};
    T y{};
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

template <typename T>
struct Mat2 {
    T a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

    T det() const { return a * d - b * c; }
    T trace() const { return a + d; }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }

    friend Vec2<T> operator*(const Mat2& m, const Vec2<T>& v) {
        return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
    }

    friend Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2<Rational> to_rational(const Mat2<Integer>& m) {
    return {Rational(m.a), Rational(m.b), Rational(m.c), Rational(m.d)};
}

/// Determinant-one integer matrix; acts on H_1 of a torus in a fixed basis.
class UnimodularZ {
public:
    explicit UnimodularZ(Mat2<Integer> m) : m_(std::move(m)) {
        require(m_.det() == 1, ErrorKind::InvalidInput,
                "integer matrix must have determinant 1, got " + m_.det().str());
    }
    UnimodularZ(Integer a, Integer b, Integer c, Integer d)
        : UnimodularZ(Mat2<Integer>{std::move(a), std::move(b), std::move(c), std::move(d)}) {}

    static UnimodularZ identity() { return UnimodularZ(Mat2<Integer>::identity()); }

    const Mat2<Integer>& mat() const noexcept { return m_; }
    const Integer& a() const noexcept { return m_.a; }
    const Integer& b() const noexcept { return m_.b; }
    const Integer& c() const noexcept { return m_.c; }
    const Integer& d() const noexcept { return m_.d; }
    Integer trace() const { return m_.trace(); }

    UnimodularZ inverse() const { return UnimodularZ(Mat2<Integer>{m_.d, -m_.b, -m_.c, m_.a}); }

    friend UnimodularZ operator*(const UnimodularZ& l, const UnimodularZ& r) {
        return UnimodularZ(l.m_ * r.m_);
    }
    friend bool operator==(const UnimodularZ&, const UnimodularZ&) = default;

private:
    Mat2<Integer> m_;
};

/// Determinant-one rational matrix (an element of SL_2(Q)).
class UnimodularQ {
public:
    explicit UnimodularQ(Mat2<Rational> m) : m_(std::move(m)) {
        require(m_.det() == 1, ErrorKind::InvalidInput,
                "matrix must have determinant 1, got " + to_string(m_.det()));
    }
    UnimodularQ(Rational a, Rational b, Rational c, Rational d)
        : UnimodularQ(Mat2<Rational>{std::move(a), std::move(b), std::move(c), std::move(d)}) {}
    UnimodularQ(const UnimodularZ& z) : m_(to_rational(z.mat())) {} // NOLINT: Z embeds in Q

    static UnimodularQ identity() { return UnimodularQ(Mat2<Rational>::identity()); }

    const Mat2<Rational>& mat() const noexcept { return m_; }
    const Rational& a() const noexcept { return m_.a; }
    const Rational& b() const noexcept { return m_.b; }
    const Rational& c() const noexcept { return m_.c; }
    const Rational& d() const noexcept { return m_.d; }

    bool is_plus_minus_identity() const {
        return m_.b == 0 && m_.c == 0 && m_.a == m_.d && abs(m_.a) == 1;
    }

    friend bool operator==(const UnimodularQ&, const UnimodularQ&) = default;

private:
    Mat2<Rational> m_;
};

inline UnimodularQ compose(const UnimodularQ& l, const UnimodularQ& r) {
    return UnimodularQ(l.mat() * r.mat());
}

inline Rational trace(const UnimodularQ& m) { return m.mat().trace(); }

inline UnimodularQ invert(const UnimodularQ& m) {
    return UnimodularQ(Mat2<Rational>{m.d(), -m.b(), -m.c(), m.a()});
}

/// Least d >= 1 with d*M integral: the lcm of the reduced entry denominators.
inline Integer denominator(const UnimodularQ& m) {
    Integer r = 1;
    for (const Rational* e : {&m.a(), &m.b(), &m.c(), &m.d()}) r = lcm(r, den(*e));
    return r;
}

/// Integer matrix denominator(M) * M.
inline Mat2<Integer> scaled_integral(const UnimodularQ& m) {
    Integer dm = denominator(m);
    auto scale = [&](const Rational& e) { return num(e) * (dm / den(e)); };
    return {scale(m.a()), scale(m.b()), scale(m.c()), scale(m.d())};
}

/// True when every entry is an integer.
inline bool is_integral(const UnimodularQ& m) { return denominator(m) == 1; }

inline UnimodularZ to_integral(const UnimodularQ& m) {
    require(is_integral(m), ErrorKind::InvalidInput, "matrix has non-integer entries");
    return UnimodularZ(num(m.a()), num(m.b()), num(m.c()), num(m.d()));
}

/// Linear-fractional action on slopes through the column vector (p, q).
inline Slope lft_apply(const UnimodularQ& m, const Slope& s) {
    Mat2<Integer> z = scaled_integral(m);
    Vec2<Integer> v = z * Vec2<Integer>{s.p(), s.q()};
    return Slope::normalize(v.x, v.y);
}

inline Slope lft_apply(const UnimodularZ& m, const Slope& s) {
    Vec2<Integer> v = m.mat() * Vec2<Integer>{s.p(), s.q()};
    return Slope::normalize(v.x, v.y);
}

/// Fixed slopes of a determinant-one matrix: every slope for ±I, else 0–2.
struct EigenslopeResult {
    bool all = false;
    std::vector<Slope> slopes; // sorted ascending, empty when all is set

    bool empty() const { return !all && slopes.empty(); }
    bool fixes_some_slope() const { return all || !slopes.empty(); }
    bool contains(const Slope& s) const {
        if (all) return true;
        for (const auto& e : slopes)
            if (e == s) return true;
        return false;
    }
    friend bool operator==(const EigenslopeResult&, const EigenslopeResult&) = default;
};

/**
 * Exact rational eigenslopes.
 *
 * A finite slope r is fixed iff c r^2 + (d - a) r - b = 0; infinity is
 * fixed iff c = 0. Rationality of the roots is decided by whether the
 * discriminant (d - a)^2 + 4bc is the square of a rational.
 */
inline EigenslopeResult rational_eigenslopes(const UnimodularQ& m) {
    EigenslopeResult out;
    if (m.is_plus_minus_identity()) {
        out.all = true;
        return out;
    }
    const Rational &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
    auto add = [&](const Rational& r) {
        Slope s = Slope::normalize(num(r), den(r));
        for (const auto& e : out.slopes)
            if (e == s) return;
        out.slopes.push_back(std::move(s));
    };
    if (c == 0) {
        out.slopes.push_back(Slope::infinity());
        // (d - a) r = b; with c = 0 and M != ±I, d = a forces b != 0.
        if (d != a) add(b / (d - a));
    } else {
        Rational disc = (d - a) * (d - a) + 4 * b * c;
        Rational root;
        if (rational_sqrt_exact(disc, root)) {
            add((a - d + root) / (2 * c));
            add((a - d - root) / (2 * c));
        }
    }
    std::sort(out.slopes.begin(), out.slopes.end());
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const UnimodularQ& m) {
    return os << "[[" << to_string(m.a()) << "," << to_string(m.b()) << "],["
              << to_string(m.c()) << "," << to_string(m.d()) << "]]";
}

inline std::ostream& operator<<(std::ostream& os, const UnimodularZ& m) {
    return os << "[[" << m.a() << "," << m.b() << "],[" << m.c() << "," << m.d() << "]]";
}

} // namespace slopecert
