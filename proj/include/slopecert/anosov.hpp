#pragma once

/**
 * @file anosov.hpp
 * @brief The least power N after which sigma^n psi has c-distance >= 1.
 *
 * For K = psi Phi_C, t_n = trace(sigma^n K) satisfies the Cayley-Hamilton
 * recurrence t_{n+1} = trace(sigma) t_n - t_{n-1}. Per n, sigma^n K has
 * no rational eigenslope when |t_n| < 2/d_n or |t_n| > 2 d_n, where
 * d_n = d(sigma^n K) divides d(K) because sigma is integral.
 *
 * Tail certificates. With |trace sigma| >= 3:
 *  - growth: once |t_{m+1}| >= |t_m| and |t_{m+1}| > 2 d(K), the recurrence
 *    gives |t_{k+1}| >= 2 |t_k| for all k > m, so every later index passes;
 *  - zero: once t_m = t_{m+1} = 0 the sequence is identically zero.
 * One of the two always appears: d(K) t_n is an integer, so a sequence
 * that does not grow must reach zero exactly.
 */

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "slopecert/certify.hpp"
#include "slopecert/class_maps.hpp"
#include "slopecert/matrix.hpp"

namespace slopecert {

inline bool is_hyperbolic(const UnimodularZ& sigma) { return abs(sigma.trace()) > 2; }

inline UnimodularZ power(const UnimodularZ& m, std::size_t n) {
    UnimodularZ result = UnimodularZ::identity(), base = m;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

/// t_0 .. t_{n_max} with t_n = trace(sigma^n K).
inline std::vector<Rational> trace_sequence(const UnimodularZ& sigma, const UnimodularQ& k, std::size_t n_max) {
    std::vector<Rational> t;
    t.reserve(n_max + 1);
    t.push_back(trace(k));
    if (n_max == 0) return t;
    t.push_back(trace(compose(UnimodularQ(sigma), k)));
    const Rational ts(sigma.trace());
    for (std::size_t n = 2; n <= n_max; ++n) t.push_back(ts * t[n - 1] - t[n - 2]);
    return t;
}

/// The per-n criterion, evaluated on the matrix sigma^n K itself.
inline bool power_criterion(const UnimodularQ& m) { return trace_criterion(m); }

enum class EigenslopeStatus { None, Rational, All };

constexpr std::string_view to_string(EigenslopeStatus s) {
    switch (s) {
    case EigenslopeStatus::None: return "none";
    case EigenslopeStatus::Rational: return "rational";
    case EigenslopeStatus::All: return "all";
    }
    return "";
}

inline EigenslopeStatus eigenslope_status(const UnimodularQ& m) {
    auto e = rational_eigenslopes(m);
    if (e.all) return EigenslopeStatus::All;
    return e.slopes.empty() ? EigenslopeStatus::None : EigenslopeStatus::Rational;
}

enum class TailKind { Growth, Zero };

constexpr std::string_view to_string(TailKind k) { return k == TailKind::Growth ? "growth" : "zero"; }

struct PowerDiagnostic {
    std::size_t n = 0;
    Rational trace;
    Integer denominator;
    bool criterion = false;
    EigenslopeStatus eigenslopes = EigenslopeStatus::None;
    friend bool operator==(const PowerDiagnostic&, const PowerDiagnostic&) = default;
};

struct ClassPowerBound {
    ClassMap class_map;
    UnimodularQ k = UnimodularQ::identity(); // psi * Phi_C
    std::size_t n = 0;                        // N_C
    std::size_t tail_index = 0;
    TailKind tail_kind = TailKind::Growth;
    std::pair<Rational, Rational> tail_traces; // (t_{tail}, t_{tail+1})
    Integer d_k;
    std::vector<PowerDiagnostic> prefix; // indices 0 .. max(N_C, tail_index + 1)
    friend bool operator==(const ClassPowerBound&, const ClassPowerBound&) = default;
};

struct PowerBoundReport {
    UnimodularZ sigma = UnimodularZ::identity();
    UnimodularZ psi = UnimodularZ::identity();
    std::vector<ClassPowerBound> per_class;
    std::size_t overall_n = 0;
    friend bool operator==(const PowerBoundReport&, const PowerBoundReport&) = default;
};

namespace detail {

inline constexpr std::size_t kMaxTailSearch = 100000;

inline ClassPowerBound class_power_bound(const UnimodularZ& sigma, const UnimodularZ& psi, const ClassMap& cm) {
    ClassPowerBound out;
    out.class_map = cm;
    out.k = compose(UnimodularQ(psi), cm.phi);
    out.d_k = denominator(out.k);

    const Rational ts(sigma.trace());
    const Rational bound = 2 * Rational(out.d_k);
    std::vector<Rational> t{trace(out.k), trace(compose(UnimodularQ(sigma), out.k))};

    std::size_t m = 0;
    for (;; ++m) {
        require(m < kMaxTailSearch, ErrorKind::InvalidInput, "trace sequence tail not found");
        if (t.size() < m + 2) t.push_back(ts * t[m] - t[m - 1]);
        if (t[m] == 0 && t[m + 1] == 0) {
            out.tail_kind = TailKind::Zero;
            break;
        }
        if (abs(t[m + 1]) >= abs(t[m]) && abs(t[m + 1]) > bound) {
            out.tail_kind = TailKind::Growth;
            break;
        }
    }
    out.tail_index = m;
    out.tail_traces = {t[m], t[m + 1]};

    // Exact check of every index before the tail takes over.
    const std::size_t tail_start = out.tail_kind == TailKind::Growth ? m + 1 : m;
    UnimodularQ cur = out.k;
    const UnimodularQ step(sigma);
    std::vector<PowerDiagnostic> diag;
    for (std::size_t n = 0; n <= m + 1; ++n) {
        diag.push_back({n, trace(cur), denominator(cur), power_criterion(cur), eigenslope_status(cur)});
        cur = compose(step, cur);
    }
    out.n = 0;
    for (std::size_t n = 0; n < tail_start; ++n)
        if (!diag[n].criterion) out.n = n + 1;
    out.prefix = std::move(diag);
    return out;
}

} // namespace detail

inline PowerBoundReport power_bound(const UnimodularZ& sigma, const UnimodularZ& psi,
                                    const std::vector<ClassMap>& classes) {
    require(is_hyperbolic(sigma), ErrorKind::InvalidInput,
            "sigma must be hyperbolic (|trace| > 2), trace is " + sigma.trace().str());
    require(!classes.empty(), ErrorKind::InvalidInput, "at least one class map is required");
    PowerBoundReport rep;
    rep.sigma = sigma;
    rep.psi = psi;
    for (const auto& cm : classes) {
        rep.per_class.push_back(detail::class_power_bound(sigma, psi, cm));
        rep.overall_n = std::max(rep.overall_n, rep.per_class.back().n);
    }
    return rep;
}

/// Re-checks the tail certificate of each class, then recomputes the report.
inline bool verify_power_bound(const PowerBoundReport& rep, std::string* why = nullptr) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (!is_hyperbolic(rep.sigma)) return fail("sigma is not hyperbolic");
    std::size_t overall = 0;
    for (const auto& pc : rep.per_class) {
        if (compose(UnimodularQ(rep.psi), pc.class_map.phi) != pc.k) return fail("K is not psi * Phi");
        if (denominator(pc.k) != pc.d_k) return fail("d(K) mismatch");
        auto t = trace_sequence(rep.sigma, pc.k, pc.tail_index + 1);
        if (std::pair{t[pc.tail_index], t[pc.tail_index + 1]} != pc.tail_traces) return fail("tail traces mismatch");
        const auto& [a, b] = pc.tail_traces;
        bool tail_ok = pc.tail_kind == TailKind::Zero ? (a == 0 && b == 0)
                                                      : (abs(b) >= abs(a) && abs(b) > 2 * Rational(pc.d_k));
        if (!tail_ok) return fail("tail condition does not hold");
        overall = std::max(overall, pc.n);
    }
    if (overall != rep.overall_n) return fail("overall N is not the maximum over classes");
    std::vector<ClassMap> classes;
    for (const auto& pc : rep.per_class) classes.push_back(pc.class_map);
    if (power_bound(rep.sigma, rep.psi, classes) != rep) return fail("recomputation differs");
    return true;
}

} // namespace slopecert
