#pragma once

/**
 * @file certify.hpp
 * @brief c-distance certificates for torus gluing maps.
 *
 * A composition phi * Phi_C has distance zero exactly when it fixes a
 * slope, i.e. when it has a rational eigenslope, so the 0 / >= 1 split is
 * decided exactly. Nothing here decides distance >= 2: each result also
 * carries the smallest displacement d(g, M g) found over slopes of bounded
 * height, which is an upper bound on the true minimum.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slopecert/class_maps.hpp"
#include "slopecert/farey.hpp"
#include "slopecert/matrix.hpp"

namespace slopecert {

inline constexpr std::int64_t kDefaultSearchBound = 100;

/// Default search bound, overridable through SLOPECERT_BOUND.
inline std::int64_t default_search_bound() {
    if (const char* env = std::getenv("SLOPECERT_BOUND")) {
        Integer v = parse_integer(env);
        require(v >= 1 && v <= 1000000, ErrorKind::InvalidInput, "SLOPECERT_BOUND must be in [1, 1000000]");
        return static_cast<std::int64_t>(v);
    }
    return kDefaultSearchBound;
}

enum class Criterion { RationalEigenslopeFound, EigenslopeSetEmpty, TraceBound };

constexpr std::string_view to_string(Criterion c) {
    switch (c) {
    case Criterion::RationalEigenslopeFound: return "rational-eigenslope-found";
    case Criterion::EigenslopeSetEmpty: return "eigenslope-set-empty";
    case Criterion::TraceBound: return "trace-bound";
    }
    return "";
}

inline Criterion parse_criterion(std::string_view s) {
    for (Criterion c : {Criterion::RationalEigenslopeFound, Criterion::EigenslopeSetEmpty, Criterion::TraceBound})
        if (to_string(c) == s) return c;
    throw Error(ErrorKind::InvalidInput, "unknown criterion '" + std::string(s) + "'");
}

struct MapDistanceResult {
    int lower_bound = 0; // 0 or 1, exact
    std::optional<Slope> fixed_slope_witness;
    Criterion criterion = Criterion::RationalEigenslopeFound;
    std::int64_t empirical_min_displacement = 0;
    Slope empirical_witness = Slope::infinity();
    std::int64_t search_bound = kDefaultSearchBound;

    friend bool operator==(const MapDistanceResult&, const MapDistanceResult&) = default;
};

/// |trace L| < 2/d(L) or |trace L| > 2 d(L); sufficient for no rational eigenslope.
inline bool trace_criterion(const UnimodularQ& m) {
    Rational t = abs(trace(m));
    Rational dm(denominator(m));
    return t < 2 / dm || t > 2 * dm;
}

/// All canonical slopes of height at most `bound`, ascending.
inline std::vector<Slope> slopes_up_to(std::int64_t bound) {
    std::vector<Slope> out;
    for (std::int64_t q = 1; q <= bound; ++q)
        for (std::int64_t p = -bound; p <= bound; ++p)
            if (std::gcd(p, q) == 1) out.push_back(Slope::normalize(p, q));
    std::sort(out.begin(), out.end());
    out.push_back(Slope::infinity());
    return out;
}

/// Smallest d(g, M g) over slopes g of height <= bound; ties go to the smallest g.
inline std::pair<std::int64_t, Slope> min_displacement(const UnimodularQ& m, const std::vector<Slope>& slopes) {
    std::optional<std::pair<std::int64_t, Slope>> best;
    for (const Slope& g : slopes) {
        std::int64_t d = distance(g, lft_apply(m, g));
        if (!best || d < best->first) best = {d, g};
        if (d == 0) break;
    }
    return *best;
}

inline MapDistanceResult map_distance(const UnimodularQ& m, std::int64_t search_bound,
                                      const std::vector<Slope>& slopes) {
    require(search_bound >= 1, ErrorKind::InvalidInput, "search bound must be positive");
    MapDistanceResult r;
    r.search_bound = search_bound;
    auto eig = rational_eigenslopes(m);
    if (eig.fixes_some_slope()) {
        r.lower_bound = 0;
        r.fixed_slope_witness = eig.all ? Slope::integer(0) : eig.slopes.front();
        r.criterion = Criterion::RationalEigenslopeFound;
    } else {
        r.lower_bound = 1;
        r.criterion = trace_criterion(m) ? Criterion::TraceBound : Criterion::EigenslopeSetEmpty;
    }
    auto [d, w] = min_displacement(m, slopes);
    r.empirical_min_displacement = d;
    r.empirical_witness = w;
    return r;
}

inline MapDistanceResult map_distance(const UnimodularQ& m, std::int64_t search_bound = kDefaultSearchBound) {
    return map_distance(m, search_bound, slopes_up_to(search_bound));
}

struct ClassResult {
    ClassMap class_map;
    MapDistanceResult result;
    friend bool operator==(const ClassResult&, const ClassResult&) = default;
};

struct DistanceCertificate {
    UnimodularZ gluing = UnimodularZ::identity();
    std::vector<ClassResult> per_class;
    int c_distance_lower_bound = 0;
    std::int64_t search_bound = kDefaultSearchBound;

    friend bool operator==(const DistanceCertificate&, const DistanceCertificate&) = default;
};

/// Minimum over classes of the distance of phi * Phi_C.
inline DistanceCertificate c_distance(const UnimodularZ& phi, const std::vector<ClassMap>& classes,
                                      std::int64_t search_bound = kDefaultSearchBound) {
    require(!classes.empty(), ErrorKind::InvalidInput, "at least one class map is required");
    DistanceCertificate cert;
    cert.gluing = phi;
    cert.search_bound = search_bound;
    const auto slopes = slopes_up_to(search_bound);
    cert.c_distance_lower_bound = 1;
    for (const auto& cm : classes) {
        auto r = map_distance(compose(UnimodularQ(phi), cm.phi), search_bound, slopes);
        cert.c_distance_lower_bound = std::min(cert.c_distance_lower_bound, r.lower_bound);
        cert.per_class.push_back({cm, std::move(r)});
    }
    return cert;
}

struct Gluing {
    UnimodularZ phi = UnimodularZ::identity();
    std::vector<ClassMap> classes;
};

struct Ordering {
    std::string label;
    std::vector<Gluing> gluings;
};

struct OrderingReport {
    std::string label;
    std::vector<DistanceCertificate> certificates;
    int min_lower_bound = 0;
    std::int64_t min_empirical_displacement = 0;
    // "refuted": some slope moves distance <= 1, so this ordering's
    // generalized c-distance is at most 1. "unresolved": every searched
    // slope moves at least 2, which is evidence, not a certificate.
    bool distance_two_refuted = false;

    friend bool operator==(const OrderingReport&, const OrderingReport&) = default;
};

struct CollectionReport {
    std::vector<OrderingReport> orderings;
    int best = 0; // max over orderings of the min lower bound
    std::int64_t search_bound = kDefaultSearchBound;

    friend bool operator==(const CollectionReport&, const CollectionReport&) = default;
};

inline CollectionReport collection_distance(const std::vector<Ordering>& orderings,
                                            std::int64_t search_bound = kDefaultSearchBound) {
    require(!orderings.empty(), ErrorKind::InvalidInput, "at least one ordering is required");
    CollectionReport rep;
    rep.search_bound = search_bound;
    for (const auto& ord : orderings) {
        require(!ord.gluings.empty(), ErrorKind::InvalidInput, "ordering '" + ord.label + "' has no gluings");
        OrderingReport o;
        o.label = ord.label;
        o.min_lower_bound = 1;
        std::optional<std::int64_t> emp;
        for (const auto& g : ord.gluings) {
            auto cert = c_distance(g.phi, g.classes, search_bound);
            o.min_lower_bound = std::min(o.min_lower_bound, cert.c_distance_lower_bound);
            for (const auto& pc : cert.per_class)
                if (!emp || pc.result.empirical_min_displacement < *emp) emp = pc.result.empirical_min_displacement;
            o.certificates.push_back(std::move(cert));
        }
        o.min_empirical_displacement = *emp;
        o.distance_two_refuted = *emp <= 1;
        rep.orderings.push_back(std::move(o));
    }
    rep.best = 0;
    for (const auto& o : rep.orderings) rep.best = std::max(rep.best, o.min_lower_bound);
    return rep;
}

/// Independent re-check of a certificate's witnesses, then a full recomputation.
inline bool verify_certificate(const DistanceCertificate& cert, std::string* why = nullptr) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    if (cert.per_class.empty()) return fail("certificate lists no classes");
    int lb = 1;
    for (const auto& pc : cert.per_class) {
        const UnimodularQ m = compose(UnimodularQ(cert.gluing), pc.class_map.phi);
        const auto& r = pc.result;
        if (r.search_bound != cert.search_bound) return fail("search bound mismatch");
        if ((r.lower_bound == 0) != r.fixed_slope_witness.has_value()) return fail("witness/lower bound mismatch");
        if (r.fixed_slope_witness && lft_apply(m, *r.fixed_slope_witness) != *r.fixed_slope_witness)
            return fail("fixed-slope witness " + r.fixed_slope_witness->str() + " is not fixed");
        if (r.empirical_witness.height() > r.search_bound) return fail("empirical witness outside search bound");
        if (distance(r.empirical_witness, lft_apply(m, r.empirical_witness)) != r.empirical_min_displacement)
            return fail("empirical witness does not realise the recorded displacement");
        if (r.empirical_min_displacement < r.lower_bound) return fail("empirical displacement below lower bound");
        lb = std::min(lb, r.lower_bound);
    }
    if (lb != cert.c_distance_lower_bound) return fail("lower bound is not the minimum over classes");

    std::vector<ClassMap> classes;
    for (const auto& pc : cert.per_class) classes.push_back(pc.class_map);
    if (c_distance(cert.gluing, classes, cert.search_bound) != cert) return fail("recomputation differs");
    return true;
}

} // namespace slopecert
