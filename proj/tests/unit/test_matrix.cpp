#include <gtest/gtest.h>

#include "slopecert/matrix.hpp"
#include "support/generators.hpp"

using namespace slopecert;
using namespace slopecert::testing;

namespace {

UnimodularQ q(Rational a, Rational b, Rational c, Rational d) { return UnimodularQ(a, b, c, d); }

// Fixed-slope test on the integer-scaled matrix, no division and no
// eigen-machinery: (A p + B q, C p + D q) is parallel to (p, q).
bool fixes(const UnimodularQ& m, std::int64_t p, std::int64_t qq) {
    Integer dm = 1;
    for (const Rational* e : {&m.a(), &m.b(), &m.c(), &m.d()}) dm = lcm(dm, den(*e));
    auto sc = [&](const Rational& e) { return num(e) * (dm / den(e)); };
    Integer A = sc(m.a()), B = sc(m.b()), C = sc(m.c()), D = sc(m.d());
    return C * p * p + (D - A) * p * qq - B * qq * qq == 0;
}

std::vector<Slope> brute_force_fixed(const UnimodularQ& m, std::int64_t h) {
    std::vector<Slope> out;
    for (std::int64_t qq = 0; qq <= h; ++qq)
        for (std::int64_t p = -h; p <= h; ++p)
            if (std::gcd(p, qq) == 1 && (qq > 0 || p == 1) && fixes(m, p, qq)) out.push_back(Slope::normalize(p, qq));
    std::sort(out.begin(), out.end());
    return out;
}

Integer denominator_by_search(const UnimodularQ& m) {
    for (Integer d = 1;; ++d) {
        bool ok = true;
        for (const Rational* e : {&m.a(), &m.b(), &m.c(), &m.d()})
            if (den(*e * Rational(d)) != 1) ok = false;
        if (ok) return d;
    }
}

} // namespace

TEST(Unimodular, RejectsWrongDeterminant) {
    EXPECT_THROW(UnimodularQ(2, 0, 0, 1), Error);
    EXPECT_THROW(UnimodularZ(1, 1, 1, 1), Error);
    EXPECT_NO_THROW(UnimodularQ(Rational(1, 2), 0, 0, 2));
}

TEST(LftApply, Examples) {
    EXPECT_EQ(lft_apply(UnimodularQ::identity(), Slope::parse("3/7")), Slope::parse("3/7"));
    EXPECT_EQ(lft_apply(UnimodularQ::identity(), Slope::infinity()), Slope::infinity());
    EXPECT_EQ(lft_apply(q(1, 1, 0, 1), Slope::parse("0/1")), Slope::parse("1/1"));
    EXPECT_EQ(lft_apply(q(2, 1, 1, 1), Slope::infinity()), Slope::parse("2/1"));
    EXPECT_EQ(lft_apply(UnimodularZ(2, 1, 1, 1), Slope::infinity()), Slope::parse("2/1"));
    // A pole of the fraction formula maps to infinity.
    EXPECT_EQ(lft_apply(q(2, 1, 1, 1), Slope::parse("-1/1")), Slope::infinity());
}

TEST(LftApply, AgreesWithFractionFormula) {
    Rng rng(21);
    for (int i = 0; i < 500; ++i) {
        UnimodularQ m = random_sl2q(rng);
        Slope s = random_slope(rng, 40);
        if (s.is_infinity()) continue;
        Rational x(s.p(), s.q());
        Rational den_ = m.c() * x + m.d();
        Slope got = lft_apply(m, s);
        if (den_ == 0) {
            EXPECT_TRUE(got.is_infinity());
        } else {
            Rational y = (m.a() * x + m.b()) / den_;
            EXPECT_EQ(got, Slope::normalize(num(y), den(y)));
        }
    }
}

TEST(LftApply, ActionLaw) {
    Rng rng(22);
    for (int i = 0; i < 500; ++i) {
        UnimodularQ a = random_mixed_sl2q(rng), b = random_mixed_sl2q(rng);
        Slope s = random_slope(rng, 50);
        EXPECT_EQ(lft_apply(compose(a, b), s), lft_apply(a, lft_apply(b, s)));
    }
}

TEST(LftApply, IntegerActionPreservesIntersectionNumber) {
    Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        UnimodularZ a = random_sl2z(rng);
        Slope s = random_slope(rng, 50), t = random_slope(rng, 50);
        EXPECT_EQ(intersection_number(lft_apply(a, s), lft_apply(a, t)), intersection_number(s, t));
    }
}

TEST(Denominator, Examples) {
    EXPECT_EQ(denominator(UnimodularQ::identity()), 1);
    EXPECT_EQ(denominator(q(Rational(1, 2), 0, 0, 2)), 2);
    EXPECT_EQ(denominator(q(Rational(1, 3), 0, Rational(1, 2), 3)), 6);
}

TEST(Denominator, MatchesSearchAndInverse) {
    Rng rng(24);
    for (int i = 0; i < 300; ++i) {
        UnimodularQ m = random_sl2q(rng, 9, 12);
        EXPECT_EQ(denominator(m), denominator_by_search(m));
        EXPECT_EQ(denominator(invert(m)), denominator(m));
    }
}

TEST(Denominator, BoundsOnScaledImages) {
    Rng rng(25);
    for (int i = 0; i < 1000; ++i) {
        UnimodularQ l = random_mixed_sl2q(rng);
        Slope u = random_slope(rng, 30);
        Vec2<Rational> w = l.mat() * Vec2<Rational>{Rational(u.p()), Rational(u.q())};
        Integer r0 = lcm(den(w.x), den(w.y));
        Integer r = r0 * uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1);
        Integer ix = num(w.x * Rational(r)), iy = num(w.y * Rational(r));
        Integer s = gcd(ix, iy);
        Rational ratio = abs(make_rational(s, r));
        Rational dl(denominator(l));
        EXPECT_GE(dl, ratio);
        EXPECT_GE(ratio, 1 / dl);
    }
}

TEST(Compose, IdentityTraceInverse) {
    UnimodularQ m(2, 1, 1, 1);
    EXPECT_EQ(compose(UnimodularQ::identity(), m), m);
    EXPECT_EQ(trace(m), 3);
    UnimodularQ n(0, -1, 1, 1);
    EXPECT_EQ(invert(n), UnimodularQ(1, 1, -1, 0));
    EXPECT_EQ(compose(n, invert(n)), UnimodularQ::identity());
    EXPECT_EQ(UnimodularZ(0, -1, 1, 1).inverse(), UnimodularZ(1, 1, -1, 0));
}

TEST(Compose, DeterminantPreserved) {
    Rng rng(26);
    for (int i = 0; i < 300; ++i) {
        UnimodularQ a = random_sl2q(rng), b = random_sl2q(rng);
        EXPECT_EQ(compose(a, b).mat().det(), 1);
        EXPECT_EQ(compose(a, invert(a)), UnimodularQ::identity());
    }
}

TEST(Eigenslopes, Examples) {
    EXPECT_TRUE(rational_eigenslopes(UnimodularQ::identity()).all);
    EXPECT_TRUE(rational_eigenslopes(UnimodularQ(-1, 0, 0, -1)).all);
    auto par = rational_eigenslopes(q(1, 1, 0, 1));
    EXPECT_FALSE(par.all);
    ASSERT_EQ(par.slopes.size(), 1u);
    EXPECT_EQ(par.slopes[0], Slope::infinity());
    EXPECT_TRUE(rational_eigenslopes(q(2, 1, 1, 1)).empty());
    EXPECT_TRUE(rational_eigenslopes(q(0, 1, -1, 0)).empty());
    auto diag = rational_eigenslopes(q(Rational(1, 2), 0, 0, 2));
    EXPECT_EQ(diag.slopes, (std::vector<Slope>{Slope::parse("0/1"), Slope::infinity()}));
}

TEST(Eigenslopes, GoldenMatrixHasNoneUpTo100) {
    EXPECT_TRUE(brute_force_fixed(q(2, 1, 1, 1), 100).empty());
}

TEST(Eigenslopes, EquivalentToFixedSlopesUpTo100) {
    Rng rng(27);
    for (int i = 0; i < 60; ++i) {
        UnimodularQ m = random_mixed_sl2q(rng);
        if (m.is_plus_minus_identity()) continue;
        auto exact = rational_eigenslopes(m);
        auto brute = brute_force_fixed(m, 100);
        for (const auto& s : brute) EXPECT_TRUE(exact.contains(s)) << m << " " << s;
        for (const auto& s : exact.slopes) {
            EXPECT_EQ(lft_apply(m, s), s);
            if (s.height() <= 100) EXPECT_NE(std::find(brute.begin(), brute.end(), s), brute.end());
        }
    }
}

TEST(Eigenslopes, ExactForHugeEntries) {
    // A split matrix with large eigenvectors, far outside any search bound.
    UnimodularZ p(Integer("1000000007"), Integer("1000000006"), Integer("1000000008"), Integer("1000000007"));
    UnimodularQ m = compose(compose(UnimodularQ(p), UnimodularQ(Rational(3), 0, 0, Rational(1, 3))), UnimodularQ(p.inverse()));
    auto e = rational_eigenslopes(m);
    ASSERT_EQ(e.slopes.size(), 2u);
    for (const auto& s : e.slopes) EXPECT_EQ(lft_apply(m, s), s);
    EXPECT_TRUE(e.contains(Slope::normalize(Integer("1000000007"), Integer("1000000008"))));
}
