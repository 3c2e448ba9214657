#pragma once

/**
 * @file cli.hpp
 * @brief Command-line dispatcher; tools/slopecert.cpp is a thin wrapper.
 *
 * Exit codes: ok and certified -> 0, distance-zero -> 2, invalid-input -> 1.
 */

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "slopecert/anosov.hpp"
#include "slopecert/certify.hpp"
#include "slopecert/class_maps.hpp"
#include "slopecert/conventions.hpp"
#include "slopecert/farey.hpp"
#include "slopecert/json_io.hpp"
#include "slopecert/normal_torus.hpp"

namespace slopecert::cli {

enum class Status { Ok, Certified, DistanceZero, InvalidInput };

constexpr std::string_view to_string(Status s) {
    switch (s) {
    case Status::Ok: return "ok";
    case Status::Certified: return "certified";
    case Status::DistanceZero: return "distance-zero";
    case Status::InvalidInput: return "invalid-input";
    }
    return "";
}

constexpr int exit_code(Status s) {
    switch (s) {
    case Status::Ok:
    case Status::Certified: return 0;
    case Status::DistanceZero: return 2;
    case Status::InvalidInput: return 1;
    }
    return 1;
}

struct CommandResult {
    Status status = Status::Ok;
    json payload;
    std::string diagnostic; // human-readable, for stderr
    std::string text;       // help output; printed instead of payload when set
    bool pretty = false;

    int exit_code() const { return cli::exit_code(status); }

    std::string output() const {
        if (!text.empty()) return text;
        return payload.dump(pretty ? 2 : -1) + "\n";
    }
};

namespace detail {

inline CommandResult ok(json payload, Status s = Status::Ok) { return {s, std::move(payload), {}, {}, false}; }

inline CommandResult invalid(std::string kind, std::string message) {
    CommandResult r;
    r.status = Status::InvalidInput;
    r.payload = {{"error", std::move(kind)}, {"message", message}};
    r.diagnostic = std::move(message);
    return r;
}

inline json eigenslopes_json(const EigenslopeResult& e) {
    if (e.all) return "all";
    json out = json::array();
    for (const auto& s : e.slopes) out.push_back(to_json(s));
    return out;
}

inline json coords_json(const NormalCoordinates& x) { return json::array({x.x1.str(), x.x2.str(), x.x3.str()}); }

inline json decomposition_json(const NormalCoordinates& x) {
    auto d = decompose(x);
    return {{"coordinates", coords_json(x)},
            {"types", curve_types(x)},
            {"slope", d.essential_slope ? to_json(*d.essential_slope) : json(nullptr)},
            {"multiplicity", d.essential_multiplicity.str()},
            {"trivial", d.trivial_count.str()}};
}

inline std::int64_t resolve_bound(const std::optional<std::int64_t>& flag) {
    if (flag) {
        require(*flag >= 1, ErrorKind::InvalidInput, "--bound must be positive");
        return *flag;
    }
    return default_search_bound();
}

inline CommandResult verify_file(const std::string& path) {
    json j = read_json_file(path);
    std::string kind = slopecert::detail::string_field(j, "kind");
    std::string why;
    bool good = false;
    if (kind == "distance-certificate") {
        good = verify_certificate(distance_certificate_from_json(j), &why);
    } else if (kind == "collection-report") {
        auto rep = collection_report_from_json(j);
        good = true;
        for (const auto& o : rep.orderings) {
            for (const auto& c : o.certificates)
                if (good && !verify_certificate(c, &why)) good = false;
        }
        if (good) {
            // Rebuild the inputs from the certificates and recompute the report.
            std::vector<Ordering> ords;
            for (const auto& o : rep.orderings) {
                Ordering ord{o.label, {}};
                for (const auto& c : o.certificates) {
                    Gluing g{c.gluing, {}};
                    for (const auto& pc : c.per_class) g.classes.push_back(pc.class_map);
                    ord.gluings.push_back(std::move(g));
                }
                ords.push_back(std::move(ord));
            }
            if (collection_distance(ords, rep.search_bound) != rep) {
                good = false;
                why = "recomputation differs";
            }
        }
    } else if (kind == "power-bound-report") {
        good = verify_power_bound(power_bound_report_from_json(j), &why);
    } else {
        throw Error(ErrorKind::InvalidInput, "unknown certificate kind '" + kind + "'");
    }
    if (!good) return invalid("verification-failed", kind + ": " + why);
    return ok({{"verified", true}, {"kind", kind}});
}

} // namespace detail

inline CommandResult run(const std::vector<std::string>& argv) {
    CLI::App app{"Exact slope, Farey-graph and gluing-map certification tools", "slopecert"};
    app.set_help_all_flag("--help-all", "Expand all help");
    bool pretty = false, version = false;
    std::string verify_path;
    app.add_flag("--pretty", pretty, "Indent JSON output");
    app.add_flag("--version", version, "Print version and convention hash");
    app.add_option("--verify", verify_path, "Recompute and confirm a certificate file");

    std::vector<std::pair<CLI::App*, std::function<CommandResult()>>> actions;
    auto action = [&](CLI::App* sub, std::function<CommandResult()> fn) { actions.emplace_back(sub, std::move(fn)); };

    // farey
    auto* farey = app.add_subcommand("farey", "Farey graph distances and geodesics")->require_subcommand(1);
    std::string fs, ft;
    auto* fdist = farey->add_subcommand("dist", "Distance between two slopes");
    fdist->add_option("s", fs, "slope p/q")->required();
    fdist->add_option("t", ft, "slope p/q")->required();
    action(fdist, [&] { return detail::ok({{"distance", distance(Slope::parse(fs), Slope::parse(ft))}}); });
    auto* fpath = farey->add_subcommand("path", "Lexicographically smallest geodesic");
    fpath->add_option("s", fs, "slope p/q")->required();
    fpath->add_option("t", ft, "slope p/q")->required();
    action(fpath, [&] {
        auto path = geodesic(Slope::parse(fs), Slope::parse(ft));
        json p = json::array();
        for (const auto& s : path) p.push_back(to_json(s));
        return detail::ok({{"distance", path.size() - 1}, {"path", p}});
    });

    // slope
    auto* slope = app.add_subcommand("slope", "Slope actions")->require_subcommand(1);
    std::string m_text, s_text;
    auto* smap = slope->add_subcommand("map", "Image of a slope under a matrix");
    smap->add_option("matrix", m_text, "[[a,b],[c,d]]")->required();
    smap->add_option("slope", s_text, "slope p/q")->required();
    action(smap, [&] { return detail::ok({{"image", to_json(lft_apply(parse_matrix_q(m_text), Slope::parse(s_text)))}}); });

    // matrix
    auto* matrix = app.add_subcommand("matrix", "Matrix invariants")->require_subcommand(1);
    auto* meig = matrix->add_subcommand("eigenslopes", "Rational eigenslopes");
    meig->add_option("matrix", m_text, "[[a,b],[c,d]]")->required();
    action(meig, [&] { return detail::ok({{"eigenslopes", detail::eigenslopes_json(rational_eigenslopes(parse_matrix_q(m_text)))}}); });
    auto* minfo = matrix->add_subcommand("info", "Trace, denominator, inverse and eigenslopes");
    minfo->add_option("matrix", m_text, "[[a,b],[c,d]]")->required();
    action(minfo, [&] {
        auto m = parse_matrix_q(m_text);
        return detail::ok({{"matrix", to_json(m)},
                           {"trace", to_json(trace(m))},
                           {"denominator", to_json(denominator(m))},
                           {"inverse", to_json(invert(m))},
                           {"trace_criterion", trace_criterion(m)},
                           {"eigenslopes", detail::eigenslopes_json(rational_eigenslopes(m))}});
    });

    // normal
    auto* normal = app.add_subcommand("normal", "Normal curves on the one-vertex torus")->require_subcommand(1);
    std::string nx, ny;
    std::string mult = "1", trivial = "0";
    auto* nslope = normal->add_subcommand("slope", "Slope and decomposition of a normal curve");
    nslope->add_option("x", nx, "x1,x2,x3")->required();
    action(nslope, [&] {
        auto x = parse_normal_coordinates(nx);
        slope_of(x); // reject curves with no essential component
        return detail::ok(detail::decomposition_json(x));
    });
    auto* ncoords = normal->add_subcommand("coords", "Normal coordinates of a slope");
    ncoords->add_option("slope", s_text, "slope p/q")->required();
    ncoords->add_option("--mult", mult, "parallel copies (>= 1)");
    ncoords->add_option("--trivial", trivial, "vertex-linking loops");
    action(ncoords, [&] {
        auto x = from_slope(Slope::parse(s_text), parse_integer(mult), parse_integer(trivial));
        return detail::ok(detail::decomposition_json(x));
    });
    auto* ninter = normal->add_subcommand("intersect", "Signed intersections of two normal curves");
    ninter->add_option("x", nx, "x1,x2,x3")->required();
    ninter->add_option("y", ny, "y1,y2,y3")->required();
    action(ninter, [&] {
        auto x = parse_normal_coordinates(nx), y = parse_normal_coordinates(ny);
        auto si = normal_sign_intersections(x, y);
        json pts = json::array();
        for (const auto& p : si.points)
            pts.push_back({{"triangle", p.triangle == Triangle::Lower ? "L" : "U"},
                           {"x_type", p.alpha_type},
                           {"y_type", p.beta_type},
                           {"sign", p.sign}});
        return detail::ok({{"x", detail::decomposition_json(x)},
                           {"y", detail::decomposition_json(y)},
                           {"same_type", share_type(x, y)},
                           {"positives", si.positives.str()},
                           {"negatives", si.negatives.str()},
                           {"algebraic", si.algebraic().str()},
                           {"total", si.total().str()},
                           {"points", pts}});
    });

    // classmap
    auto* classmap = app.add_subcommand("classmap", "Slope maps of compatibility classes")->require_subcommand(1);
    std::string r1, s1, r2, s2, t1, t2;
    auto* cfs = classmap->add_subcommand("from-surfaces", "Map from the boundary classes of two surfaces");
    cfs->add_option("--r1", r1, "p,q")->required();
    cfs->add_option("--s1", s1, "p,q")->required();
    cfs->add_option("--r2", r2, "p,q")->required();
    cfs->add_option("--s2", s2, "p,q")->required();
    action(cfs, [&] {
        return detail::ok(to_json(build_from_two_surfaces(parse_intvec(r1), parse_intvec(s1), parse_intvec(r2), parse_intvec(s2))));
    });
    auto* cfsl = classmap->add_subcommand("from-slopes", "Canonical map sending tau2 to tau1");
    cfsl->add_option("tau1", t1, "slope on T1")->required();
    cfsl->add_option("tau2", t2, "slope on T2")->required();
    action(cfsl, [&] { return detail::ok(to_json(build_from_single_slope(Slope::parse(t1), Slope::parse(t2)))); });
    unsigned tets = 0;
    auto* ccount = classmap->add_subcommand("count-bound", "Bound on typed classes of complexity zero");
    ccount->add_option("--tetrahedra", tets, "number of tetrahedra")->required();
    action(ccount, [&] {
        auto b = class_count_bound(tets);
        return detail::ok({{"bound", b.bound.str()}, {"degenerate", b.degenerate}, {"tetrahedra", tets}});
    });

    // certify
    auto* certify = app.add_subcommand("certify", "c-distance certificates")->require_subcommand(1);
    std::string phi_text, classes_path, spec_path;
    std::optional<std::int64_t> bound;
    auto* cg = certify->add_subcommand("gluing", "Certificate for one gluing map");
    cg->add_option("--phi", phi_text, "integer matrix")->required();
    cg->add_option("--classes", classes_path, "JSON list of class maps")->required();
    cg->add_option("--bound", bound, "slope search bound (default 100 or $SLOPECERT_BOUND)");
    action(cg, [&] {
        auto cert = c_distance(parse_matrix_z(phi_text), classmaps_from_json(read_json_file(classes_path)),
                               detail::resolve_bound(bound));
        return detail::ok(to_json(cert), cert.c_distance_lower_bound >= 1 ? Status::Certified : Status::DistanceZero);
    });
    auto* cc = certify->add_subcommand("collection", "Report over orderings of a collection of tori");
    cc->add_option("--spec", spec_path, "JSON collection description")->required();
    cc->add_option("--bound", bound, "slope search bound");
    action(cc, [&] {
        json spec = read_json_file(spec_path);
        std::optional<std::int64_t> b = bound;
        if (!b && spec.contains("bound")) b = slopecert::detail::count_field(spec, "bound");
        return detail::ok(to_json(collection_distance(orderings_from_json(spec), detail::resolve_bound(b))));
    });

    // anosov
    auto* anosov = app.add_subcommand("anosov", "Powers of a hyperbolic gluing")->require_subcommand(1);
    std::string sigma_text, psi_text, k_text;
    std::size_t n_max = 0;
    auto* ap = anosov->add_subcommand("power", "Least N with c-distance >= 1 for all n >= N");
    ap->add_option("--sigma", sigma_text, "hyperbolic integer matrix")->required();
    ap->add_option("--psi", psi_text, "integer matrix")->required();
    ap->add_option("--classes", classes_path, "JSON list of class maps")->required();
    action(ap, [&] {
        return detail::ok(to_json(power_bound(parse_matrix_z(sigma_text), parse_matrix_z(psi_text),
                                              classmaps_from_json(read_json_file(classes_path)))));
    });
    auto* at = anosov->add_subcommand("trace", "Traces of sigma^n K for n = 0..N");
    at->add_option("--sigma", sigma_text, "integer matrix")->required();
    at->add_option("--k", k_text, "rational matrix")->required();
    at->add_option("--n", n_max, "last index")->required();
    action(at, [&] {
        json t = json::array();
        for (const auto& x : trace_sequence(parse_matrix_z(sigma_text), parse_matrix_q(k_text), n_max)) t.push_back(to_json(x));
        return detail::ok({{"traces", t}});
    });

    CommandResult result;
    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
        if (version) {
            json table = json::object();
            for (const auto& [k, v] : kConventions) table[std::string(k)] = v;
            result = detail::ok({{"version", kVersion}, {"conventions_hash", conventions_hash()}, {"conventions", table}});
        } else if (!verify_path.empty()) {
            result = detail::verify_file(verify_path);
        } else {
            std::function<CommandResult()> fn;
            for (auto& [sub, f] : actions)
                if (sub->parsed()) fn = f;
            if (!fn) {
                result = detail::invalid("invalid-input", "no command given; see --help");
            } else {
                result = fn();
            }
        }
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        if (app.exit(e, out, err) == 0) {
            result.text = out.str();
        } else {
            result = detail::invalid("invalid-input", e.what());
        }
    } catch (const Error& e) {
        result = detail::invalid(std::string(slopecert::to_string(e.kind())), e.what());
    } catch (const std::exception& e) {
        result = detail::invalid("invalid-input", e.what());
    }
    result.pretty = pretty;
    return result;
}

} // namespace slopecert::cli
