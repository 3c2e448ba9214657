#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encoding of matrices, class maps and certificates.
 *
 * Exact values travel as strings: rationals as "p" or "p/q", slopes as
 * "p/q", arbitrary-size integers as decimal strings. Small counts
 * (distances, indices, bounds) are plain JSON integers. Floats are rejected
 * everywhere on input. Keys are emitted sorted, so compact output is
 * byte-stable.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "slopecert/anosov.hpp"
#include "slopecert/certify.hpp"
#include "slopecert/class_maps.hpp"
#include "slopecert/matrix.hpp"
#include "slopecert/slope.hpp"

namespace slopecert {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& obj, const char* key) {
    require(obj.is_object(), ErrorKind::InvalidInput, std::string("expected an object holding '") + key + "'");
    auto it = obj.find(key);
    require(it != obj.end(), ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
    return *it;
}

inline std::string string_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    require(v.is_string(), ErrorKind::InvalidInput, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

inline std::int64_t count_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    require(v.is_number_integer(), ErrorKind::InvalidInput, std::string("field '") + key + "' must be an integer");
    return v.get<std::int64_t>();
}

inline bool bool_field(const json& obj, const char* key) {
    const json& v = field(obj, key);
    require(v.is_boolean(), ErrorKind::InvalidInput, std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

} // namespace detail

inline json parse_json_text(std::string_view text, std::string_view what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, "malformed JSON in " + std::string(what) + ": " + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::InvalidInput, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

// ---- scalars ----

inline Integer integer_from_json(const json& j) {
    require(!j.is_number_float(), ErrorKind::InvalidInput, "floating-point numbers are not accepted");
    if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    require(j.is_string(), ErrorKind::InvalidInput, "expected an integer or an integer string");
    return parse_integer(j.get<std::string>());
}

inline Rational rational_from_json(const json& j) {
    require(!j.is_number_float(), ErrorKind::InvalidInput, "floating-point numbers are not accepted");
    if (j.is_number_integer()) return Rational(integer_from_json(j));
    require(j.is_string(), ErrorKind::InvalidInput, "expected a rational string \"p\" or \"p/q\"");
    return parse_rational(j.get<std::string>());
}

inline json to_json(const Integer& x) { return x.str(); }
inline json to_json(const Rational& x) { return to_string(x); }
inline json to_json(const Slope& s) { return s.str(); }

inline Slope slope_from_json(const json& j) {
    require(j.is_string(), ErrorKind::InvalidInput, "slopes are strings \"p/q\"");
    return Slope::parse(j.get<std::string>());
}

inline json to_json(const IntVec& v) { return json::array({v.x.str(), v.y.str()}); }

inline IntVec intvec_from_json(const json& j) {
    require(j.is_array() && j.size() == 2, ErrorKind::InvalidInput, "expected a vector [x, y]");
    return {integer_from_json(j[0]), integer_from_json(j[1])};
}

/// "p,q" as used on the command line.
inline IntVec parse_intvec(std::string_view text) {
    auto comma = text.find(',');
    require(comma != std::string_view::npos, ErrorKind::InvalidInput, "expected a vector \"p,q\", got '" + std::string(text) + "'");
    return {parse_integer(text.substr(0, comma)), parse_integer(text.substr(comma + 1))};
}

// ---- matrices ----

inline Mat2<Rational> mat_from_json(const json& j) {
    require(j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[1].is_array() &&
                j[1].size() == 2,
            ErrorKind::InvalidInput, "a matrix is [[a, b], [c, d]]");
    return {rational_from_json(j[0][0]), rational_from_json(j[0][1]), rational_from_json(j[1][0]),
            rational_from_json(j[1][1])};
}

inline UnimodularQ unimodular_q_from_json(const json& j) { return UnimodularQ(mat_from_json(j)); }

inline UnimodularZ unimodular_z_from_json(const json& j) {
    UnimodularQ m = unimodular_q_from_json(j);
    require(is_integral(m), ErrorKind::InvalidInput, "matrix must have integer entries");
    return to_integral(m);
}

inline UnimodularQ parse_matrix_q(std::string_view text) { return unimodular_q_from_json(parse_json_text(text, "matrix")); }
inline UnimodularZ parse_matrix_z(std::string_view text) { return unimodular_z_from_json(parse_json_text(text, "matrix")); }

inline json to_json(const UnimodularQ& m) {
    return json::array({json::array({to_string(m.a()), to_string(m.b())}), json::array({to_string(m.c()), to_string(m.d())})});
}

inline json to_json(const UnimodularZ& m) {
    return json::array({json::array({m.a().str(), m.b().str()}), json::array({m.c().str(), m.d().str()})});
}

// ---- class maps ----

inline json to_json(const ClassMap& cm) {
    json j;
    j["phi"] = to_json(cm.phi);
    j["type_pair"] = cm.type_pair ? json::array({cm.type_pair->first, cm.type_pair->second}) : json(nullptr);
    j["complexity_bound"] = cm.complexity_bound.str();
    j["provenance"] = std::string(to_string(cm.provenance));
    if (cm.surfaces) {
        j["surfaces"] = {{"r1", to_json(cm.surfaces->r1)},
                         {"s1", to_json(cm.surfaces->s1)},
                         {"r2", to_json(cm.surfaces->r2)},
                         {"s2", to_json(cm.surfaces->s2)}};
    } else {
        j["surfaces"] = nullptr;
    }
    return j;
}

/// A ClassMap record, or a bare matrix (taken as an external map).
inline ClassMap classmap_from_json(const json& j) {
    if (j.is_array()) return ClassMap::external(unimodular_q_from_json(j));
    ClassMap cm;
    cm.phi = unimodular_q_from_json(detail::field(j, "phi"));
    if (auto it = j.find("type_pair"); it != j.end() && !it->is_null()) {
        require(it->is_array() && it->size() == 2 && (*it)[0].is_number_integer() && (*it)[1].is_number_integer(),
                ErrorKind::InvalidInput, "type_pair is [i, j]");
        int a = (*it)[0].get<int>(), b = (*it)[1].get<int>();
        require(a >= 1 && a <= 3 && b >= 1 && b <= 3, ErrorKind::InvalidInput, "curve types are 1, 2 or 3");
        cm.type_pair = std::pair{a, b};
    }
    if (auto it = j.find("complexity_bound"); it != j.end()) {
        cm.complexity_bound = integer_from_json(*it);
        require(cm.complexity_bound >= 0, ErrorKind::InvalidInput, "complexity_bound must be non-negative");
    }
    if (auto it = j.find("provenance"); it != j.end()) {
        require(it->is_string(), ErrorKind::InvalidInput, "provenance must be a string");
        cm.provenance = parse_provenance(it->get<std::string>());
    }
    if (auto it = j.find("surfaces"); it != j.end() && !it->is_null()) {
        cm.surfaces = SurfacePair{intvec_from_json(detail::field(*it, "r1")), intvec_from_json(detail::field(*it, "s1")),
                                  intvec_from_json(detail::field(*it, "r2")), intvec_from_json(detail::field(*it, "s2"))};
    }
    return cm;
}

inline std::vector<ClassMap> classmaps_from_json(const json& j) {
    require(j.is_array(), ErrorKind::InvalidInput, "a class file is a JSON list of ClassMap records");
    // A single bare matrix is also a list of two lists; tell the two apart.
    if (j.size() == 2 && j[0].is_array() && j[0].size() == 2 && !j[0][0].is_array())
        throw Error(ErrorKind::InvalidInput, "a class file is a list of records; wrap a single matrix as [matrix]");
    std::vector<ClassMap> out;
    for (const auto& rec : j) out.push_back(classmap_from_json(rec));
    return out;
}

// ---- certify ----

inline json to_json(const MapDistanceResult& r) {
    return {{"lower_bound", r.lower_bound},
            {"fixed_slope_witness", r.fixed_slope_witness ? to_json(*r.fixed_slope_witness) : json(nullptr)},
            {"criterion", std::string(to_string(r.criterion))},
            {"empirical_min_displacement", r.empirical_min_displacement},
            {"empirical_witness", to_json(r.empirical_witness)},
            {"search_bound", r.search_bound}};
}

inline MapDistanceResult map_distance_result_from_json(const json& j) {
    MapDistanceResult r;
    r.lower_bound = static_cast<int>(detail::count_field(j, "lower_bound"));
    const json& w = detail::field(j, "fixed_slope_witness");
    if (!w.is_null()) r.fixed_slope_witness = slope_from_json(w);
    r.criterion = parse_criterion(detail::string_field(j, "criterion"));
    r.empirical_min_displacement = detail::count_field(j, "empirical_min_displacement");
    r.empirical_witness = slope_from_json(detail::field(j, "empirical_witness"));
    r.search_bound = detail::count_field(j, "search_bound");
    return r;
}

inline json to_json(const DistanceCertificate& c) {
    json per = json::array();
    for (const auto& pc : c.per_class) per.push_back({{"class", to_json(pc.class_map)}, {"result", to_json(pc.result)}});
    return {{"kind", "distance-certificate"},
            {"gluing", to_json(c.gluing)},
            {"per_class", per},
            {"c_distance_lower_bound", c.c_distance_lower_bound},
            {"search_bound", c.search_bound}};
}

inline DistanceCertificate distance_certificate_from_json(const json& j) {
    require(detail::string_field(j, "kind") == "distance-certificate", ErrorKind::InvalidInput, "not a distance certificate");
    DistanceCertificate c;
    c.gluing = unimodular_z_from_json(detail::field(j, "gluing"));
    const json& per = detail::field(j, "per_class");
    require(per.is_array(), ErrorKind::InvalidInput, "per_class must be a list");
    for (const auto& pc : per)
        c.per_class.push_back({classmap_from_json(detail::field(pc, "class")),
                               map_distance_result_from_json(detail::field(pc, "result"))});
    c.c_distance_lower_bound = static_cast<int>(detail::count_field(j, "c_distance_lower_bound"));
    c.search_bound = detail::count_field(j, "search_bound");
    return c;
}

inline json to_json(const CollectionReport& r) {
    json ords = json::array();
    for (const auto& o : r.orderings) {
        json certs = json::array();
        for (const auto& c : o.certificates) certs.push_back(to_json(c));
        ords.push_back({{"label", o.label},
                        {"certificates", certs},
                        {"min_lower_bound", o.min_lower_bound},
                        {"min_empirical_displacement", o.min_empirical_displacement},
                        {"distance_two", o.distance_two_refuted ? "refuted" : "unresolved"}});
    }
    return {{"kind", "collection-report"}, {"orderings", ords}, {"best", r.best}, {"search_bound", r.search_bound}};
}

inline CollectionReport collection_report_from_json(const json& j) {
    require(detail::string_field(j, "kind") == "collection-report", ErrorKind::InvalidInput, "not a collection report");
    CollectionReport r;
    const json& ords = detail::field(j, "orderings");
    require(ords.is_array(), ErrorKind::InvalidInput, "orderings must be a list");
    for (const auto& o : ords) {
        OrderingReport rep;
        rep.label = detail::string_field(o, "label");
        for (const auto& c : detail::field(o, "certificates")) rep.certificates.push_back(distance_certificate_from_json(c));
        rep.min_lower_bound = static_cast<int>(detail::count_field(o, "min_lower_bound"));
        rep.min_empirical_displacement = detail::count_field(o, "min_empirical_displacement");
        std::string s = detail::string_field(o, "distance_two");
        require(s == "refuted" || s == "unresolved", ErrorKind::InvalidInput, "distance_two is refuted or unresolved");
        rep.distance_two_refuted = s == "refuted";
        r.orderings.push_back(std::move(rep));
    }
    r.best = static_cast<int>(detail::count_field(j, "best"));
    r.search_bound = detail::count_field(j, "search_bound");
    return r;
}

/**
 * Collection input:
 *   {"orderings": [{"label": "...", "gluings": [{"phi": M, "classes": [ClassMap...]}]}]}
 * with an optional integer "bound".
 */
inline std::vector<Ordering> orderings_from_json(const json& j) {
    const json& ords = detail::field(j, "orderings");
    require(ords.is_array(), ErrorKind::InvalidInput, "orderings must be a list");
    std::vector<Ordering> out;
    for (const auto& o : ords) {
        Ordering ord;
        ord.label = detail::string_field(o, "label");
        const json& gl = detail::field(o, "gluings");
        require(gl.is_array(), ErrorKind::InvalidInput, "gluings must be a list");
        for (const auto& g : gl)
            ord.gluings.push_back({unimodular_z_from_json(detail::field(g, "phi")), classmaps_from_json(detail::field(g, "classes"))});
        out.push_back(std::move(ord));
    }
    return out;
}

// ---- anosov ----

inline json to_json(const PowerBoundReport& r) {
    json per = json::array();
    for (const auto& pc : r.per_class) {
        json diag = json::array();
        for (const auto& d : pc.prefix)
            diag.push_back({{"n", d.n},
                            {"trace", to_json(d.trace)},
                            {"denominator", to_json(d.denominator)},
                            {"criterion", d.criterion},
                            {"eigenslopes", std::string(to_string(d.eigenslopes))}});
        per.push_back({{"class", to_json(pc.class_map)},
                       {"K", to_json(pc.k)},
                       {"N", pc.n},
                       {"tail_index", pc.tail_index},
                       {"tail_kind", std::string(to_string(pc.tail_kind))},
                       {"tail_traces", json::array({to_json(pc.tail_traces.first), to_json(pc.tail_traces.second)})},
                       {"d_K", to_json(pc.d_k)},
                       {"prefix_diagnostics", diag}});
    }
    return {{"kind", "power-bound-report"},
            {"sigma", to_json(r.sigma)},
            {"psi", to_json(r.psi)},
            {"per_class", per},
            {"overall_N", r.overall_n}};
}

inline PowerBoundReport power_bound_report_from_json(const json& j) {
    require(detail::string_field(j, "kind") == "power-bound-report", ErrorKind::InvalidInput, "not a power-bound report");
    PowerBoundReport r;
    r.sigma = unimodular_z_from_json(detail::field(j, "sigma"));
    r.psi = unimodular_z_from_json(detail::field(j, "psi"));
    for (const auto& pc : detail::field(j, "per_class")) {
        ClassPowerBound c;
        c.class_map = classmap_from_json(detail::field(pc, "class"));
        c.k = unimodular_q_from_json(detail::field(pc, "K"));
        c.n = static_cast<std::size_t>(detail::count_field(pc, "N"));
        c.tail_index = static_cast<std::size_t>(detail::count_field(pc, "tail_index"));
        std::string kind = detail::string_field(pc, "tail_kind");
        require(kind == "growth" || kind == "zero", ErrorKind::InvalidInput, "tail_kind is growth or zero");
        c.tail_kind = kind == "growth" ? TailKind::Growth : TailKind::Zero;
        const json& tt = detail::field(pc, "tail_traces");
        require(tt.is_array() && tt.size() == 2, ErrorKind::InvalidInput, "tail_traces is a pair");
        c.tail_traces = {rational_from_json(tt[0]), rational_from_json(tt[1])};
        c.d_k = integer_from_json(detail::field(pc, "d_K"));
        for (const auto& d : detail::field(pc, "prefix_diagnostics")) {
            PowerDiagnostic pd;
            pd.n = static_cast<std::size_t>(detail::count_field(d, "n"));
            pd.trace = rational_from_json(detail::field(d, "trace"));
            pd.denominator = integer_from_json(detail::field(d, "denominator"));
            pd.criterion = detail::bool_field(d, "criterion");
            std::string s = detail::string_field(d, "eigenslopes");
            pd.eigenslopes = s == "none" ? EigenslopeStatus::None
                           : s == "rational" ? EigenslopeStatus::Rational
                           : s == "all" ? EigenslopeStatus::All
                                        : throw Error(ErrorKind::InvalidInput, "eigenslopes is none, rational or all");
            c.prefix.push_back(std::move(pd));
        }
        r.per_class.push_back(std::move(c));
    }
    r.overall_n = static_cast<std::size_t>(detail::count_field(j, "overall_N"));
    return r;
}

} // namespace slopecert
