#pragma once

/**
 * @file arith.hpp
 * @brief Arbitrary-precision integer and rational scalars plus the handful
 *        of number-theoretic helpers the rest of the library needs.
 *
 * Rationals are always kept in lowest terms with a positive denominator
 * (Boost.Multiprecision guarantees this for cpp_rational), so equality
 * on values is structural.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "slopecert/error.hpp"

namespace slopecert {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }
inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

inline Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

/// Floor division for signed integers (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Least non-negative residue of a modulo |m|.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer am = abs(m);
    Integer r = a % am;
    if (r < 0) r += am;
    return r;
}

/// Extended Euclid: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
inline Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer qt = old_r / r;
        Integer tmp = old_r - qt * r; old_r = r; r = tmp;
        tmp = old_s - qt * s; old_s = s; s = tmp;
        tmp = old_t - qt * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    x = old_s;
    y = old_t;
    return old_r;
}

/// Exact square root of a non-negative integer, if it is a perfect square.
inline bool integer_sqrt_exact(const Integer& n, Integer& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

/// A rational is a square iff its reduced numerator and denominator are.
inline bool rational_sqrt_exact(const Rational& x, Rational& root) {
    Integer rn, rd;
    if (!integer_sqrt_exact(num(x), rn) || !integer_sqrt_exact(den(x), rd)) return false;
    root = Rational(rn, rd);
    return true;
}

inline std::string to_string(const Integer& x) { return x.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& x) {
    if (den(x) == 1) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace detail

inline Integer parse_integer(std::string_view text) {
    auto s = detail::trim(text);
    require(detail::is_integer_literal(s), ErrorKind::InvalidInput,
            "malformed integer '" + std::string(text) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

/// Parses "p" or "p/q". Decimal points and exponents are rejected.
/// n/d for any nonzero d; the rational backend rejects negative denominators.
inline Rational make_rational(Integer n, Integer d) {
    require(d != 0, ErrorKind::InvalidInput, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

inline Rational parse_rational(std::string_view text) {
    auto s = detail::trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    Integer n = parse_integer(s.substr(0, slash));
    Integer d = parse_integer(s.substr(slash + 1));
    require(d != 0, ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    return make_rational(n, d);
}

} // namespace slopecert
