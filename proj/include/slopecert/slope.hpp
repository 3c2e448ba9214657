#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "slopecert/arith.hpp"

namespace slopecert {

/**
 * An element of Q ∪ {1/0}: a primitive integer pair (p, q) up to sign.
 *
 * Canonical form is q > 0, or (1, 0) for infinity. Construction always
 * canonicalizes, so two Slopes are equal iff their fields are equal.
 *
 * Ordering is by value on the extended line with 1/0 the largest element;
 * it is the order used for deterministic tie-breaking everywhere.
 */
class Slope {
public:
    /// Canonical coprime representative of (p, q); throws on (0, 0).
    static Slope normalize(const Integer& p, const Integer& q) {
        require(p != 0 || q != 0, ErrorKind::InvalidInput, "slope of the zero vector");
        Integer g = gcd(p, q);
        Integer a = p / g, b = q / g;
        if (b < 0 || (b == 0 && a < 0)) { a = -a; b = -b; }
        return Slope(std::move(a), std::move(b));
    }

    static Slope infinity() { return Slope(1, 0); }
    static Slope integer(const Integer& n) { return Slope(n, 1); }

    /// Parses "p/q" (or a bare integer "p").
    static Slope parse(std::string_view text) {
        auto s = detail::trim(text);
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return normalize(parse_integer(s), 1);
        return normalize(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
    }

    const Integer& p() const noexcept { return p_; }
    const Integer& q() const noexcept { return q_; }
    bool is_infinity() const noexcept { return q_ == 0; }

    /// Height max(|p|, |q|), the quantity brute-force searches are bounded by.
    Integer height() const { return abs(p_) > q_ ? abs(p_) : q_; }

    std::string str() const { return p_.str() + "/" + q_.str(); }

    friend bool operator==(const Slope&, const Slope&) = default;

    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
        if (a.is_infinity() || b.is_infinity()) {
            if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
            return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        Integer lhs = a.p_ * b.q_, rhs = b.p_ * a.q_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

private:
    Slope(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {}

    Integer p_;
    Integer q_;
};

/// Geometric intersection number |p t.q - q t.p| of the two slopes' curves.
inline Integer intersection_number(const Slope& s, const Slope& t) {
    return abs(s.p() * t.q() - s.q() * t.p());
}

/// A nonzero integer class with its multiplicity split off: (mult*p, mult*q).
struct PrimitiveClass {
    Integer p;
    Integer q;
    Integer multiplicity;

    static PrimitiveClass from_vector(const Integer& x, const Integer& y) {
        require(x != 0 || y != 0, ErrorKind::InvalidInput, "zero homology class");
        Integer g = gcd(x, y);
        return {x / g, y / g, g};
    }

    Slope slope() const { return Slope::normalize(p, q); }

    friend bool operator==(const PrimitiveClass&, const PrimitiveClass&) = default;
};

} // namespace slopecert
