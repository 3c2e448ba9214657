#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "slopecert/cli.hpp"
#include "support/generators.hpp"

using namespace slopecert;
using namespace slopecert::testing;
namespace fs = std::filesystem;

namespace {

cli::CommandResult run(std::vector<std::string> args) { return cli::run(args); }

fs::path scratch(const std::string& name, const std::string& body) {
    fs::path dir = fs::temp_directory_path() / "slopecert_test_json_cli";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << body;
    return p;
}

} // namespace

TEST(Cli, DocumentedExamples) {
    auto a = run({"farey", "dist", "0/1", "1/0"});
    EXPECT_EQ(a.output(), "{\"distance\":1}\n");
    EXPECT_EQ(a.exit_code(), 0);

    auto b = run({"matrix", "eigenslopes", "[[2,1],[1,1]]"});
    EXPECT_EQ(b.output(), "{\"eigenslopes\":[]}\n");
    EXPECT_EQ(b.exit_code(), 0);

    auto c = run({"certify", "gluing", "--phi", "[[0,1],[-1,0]]", "--classes", "samples/id.json"});
    EXPECT_EQ(c.status, cli::Status::Certified);
    EXPECT_EQ(c.exit_code(), 0);
    EXPECT_EQ(c.payload["c_distance_lower_bound"], 1);
    EXPECT_EQ(c.payload["search_bound"], kDefaultSearchBound);
}

TEST(Cli, FareyPath) {
    auto r = run({"farey", "path", "0/1", "2/1"});
    EXPECT_EQ(r.output(), "{\"distance\":2,\"path\":[\"0/1\",\"1/1\",\"2/1\"]}\n");
}

TEST(Cli, NegativeSlopePositionals) {
    auto r = run({"farey", "dist", "-1/2", "1/0"});
    EXPECT_EQ(r.exit_code(), 0) << r.diagnostic;
    EXPECT_EQ(r.payload["distance"], 2);
    auto m = run({"slope", "map", "[[0,1],[-1,0]]", "-1/3"});
    EXPECT_EQ(m.payload["image"], "3/1");
}

TEST(Cli, EigenslopesAllAndList) {
    EXPECT_EQ(run({"matrix", "eigenslopes", "[[1,0],[0,1]]"}).output(), "{\"eigenslopes\":\"all\"}\n");
    EXPECT_EQ(run({"matrix", "eigenslopes", "[[\"1/2\",0],[0,2]]"}).output(), "{\"eigenslopes\":[\"0/1\",\"1/0\"]}\n");
}

TEST(Cli, ExitCodes) {
    auto zero = run({"certify", "gluing", "--phi", "[[1,0],[0,1]]", "--classes", "samples/id.json", "--bound", "5"});
    EXPECT_EQ(zero.status, cli::Status::DistanceZero);
    EXPECT_EQ(zero.exit_code(), 2);

    for (std::vector<std::string> bad : {
             std::vector<std::string>{"matrix", "eigenslopes", "[[2,0],[0,1]]"},
             {"matrix", "eigenslopes", "[[1.0,0],[0,1]]"},
             {"farey", "dist", "0.5", "1/0"},
             {"farey", "dist", "0/0", "1/0"},
             {"nonsense"},
             {},
             {"certify", "gluing", "--phi", "[[1,0],[0,1]]", "--classes", "does/not/exist.json"},
             {"anosov", "power", "--sigma", "[[1,1],[0,1]]", "--psi", "[[1,0],[0,1]]", "--classes", "samples/id.json"},
             {"normal", "slope", "1,1,1"},
             {"classmap", "from-surfaces", "--r1", "1,0", "--s1", "0,1", "--r2", "1,0", "--s2", "0,2"},
         }) {
        auto r = run(bad);
        EXPECT_EQ(r.exit_code(), 1) << r.output();
        EXPECT_FALSE(r.diagnostic.empty());
        EXPECT_TRUE(r.payload.contains("error"));
    }
    EXPECT_EQ(cli::exit_code(cli::Status::Ok), 0);
    EXPECT_EQ(cli::exit_code(cli::Status::Certified), 0);
}

TEST(Cli, ErrorKindsNamed) {
    auto r = run({"classmap", "from-surfaces", "--r1", "1,0", "--s1", "0,1", "--r2", "1,0", "--s2", "0,2"});
    EXPECT_EQ(r.payload["error"], "violates-boundary-count");
    auto n = run({"normal", "slope", "1,1,1"});
    EXPECT_EQ(n.payload["error"], "no-essential-component");
}

TEST(Cli, Help) {
    auto r = run({"--help"});
    EXPECT_EQ(r.exit_code(), 0);
    EXPECT_NE(r.output().find("farey"), std::string::npos);
}

TEST(Cli, PrettyOutput) {
    auto r = run({"--pretty", "farey", "dist", "0/1", "1/0"});
    EXPECT_EQ(r.output(), "{\n  \"distance\": 1\n}\n");
}

TEST(Cli, VersionAndConventionHash) {
    auto a = run({"--version"}), b = run({"--version"});
    EXPECT_EQ(a.output(), b.output());
    EXPECT_EQ(a.payload["version"], std::string(kVersion));
    EXPECT_EQ(a.payload["conventions_hash"], conventions_hash());
    EXPECT_EQ(conventions_hash().rfind("fnv1a64:", 0), 0u);
    EXPECT_EQ(a.payload["conventions"].size(), kConventions.size());
}

TEST(Cli, Fnv1aKnownValues) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Cli, NormalCommands) {
    auto s = run({"normal", "slope", "0,0,1"});
    EXPECT_EQ(s.payload["slope"], "1/1");
    auto c = run({"normal", "coords", "2/3", "--mult", "2", "--trivial", "1"});
    EXPECT_EQ(c.exit_code(), 0) << c.diagnostic;
    EXPECT_EQ(c.payload["multiplicity"], "2");
    EXPECT_EQ(c.payload["trivial"], "1");
    EXPECT_EQ(c.payload["slope"], "2/3");
    auto i = run({"normal", "intersect", "0,1,1", "1,0,1"});
    EXPECT_EQ(i.payload["total"], "3");
    EXPECT_EQ(i.payload["same_type"], false);
}

TEST(Cli, ClassmapCommands) {
    auto a = run({"classmap", "from-surfaces", "--r1", "1,0", "--s1", "1,1", "--r2", "0,1", "--s2", "-1,1"});
    EXPECT_EQ(a.payload["phi"], json::parse(R"([["0","1"],["-1","0"]])"));
    EXPECT_EQ(a.payload["provenance"], "two-surface");
    auto b = run({"classmap", "from-slopes", "1/0", "0/1"});
    EXPECT_EQ(b.payload["phi"], json::parse(R"([["0","1"],["-1","0"]])"));
    auto c = run({"classmap", "count-bound", "--tetrahedra", "2"});
    EXPECT_EQ(c.payload["bound"], "81");
}

TEST(Cli, AnosovCommands) {
    auto t = run({"anosov", "trace", "--sigma", "[[2,1],[1,1]]", "--k", "[[\"1/2\",0],[0,2]]", "--n", "3"});
    EXPECT_EQ(t.output(), "{\"traces\":[\"5/2\",\"3\",\"13/2\",\"33/2\"]}\n");
    auto p = run({"anosov", "power", "--sigma", "[[2,1],[1,1]]", "--psi", "[[1,0],[0,1]]", "--classes", "samples/id.json"});
    EXPECT_EQ(p.exit_code(), 0) << p.diagnostic;
    EXPECT_EQ(p.payload["overall_N"], 1);
}

TEST(Json, FloatsRejectedEverywhere) {
    EXPECT_THROW(rational_from_json(json::parse("1.5")), Error);
    EXPECT_THROW(integer_from_json(json::parse("2.0")), Error);
    EXPECT_THROW(parse_matrix_q("[[1,0.0],[0,1]]"), Error);
    EXPECT_EQ(rational_from_json(json::parse("\"-3/6\"")), Rational(-1, 2));
    EXPECT_EQ(rational_from_json(json::parse("7")), Rational(7));
    auto f = scratch("float_class.json", R"([{"phi": [[1, 0.5], [0, 1]]}])");
    EXPECT_EQ(run({"certify", "gluing", "--phi", "[[0,1],[-1,0]]", "--classes", f.string()}).exit_code(), 1);
}

TEST(Json, ClassFileMustBeAList) {
    EXPECT_THROW(classmaps_from_json(json::parse(R"([["1","0"],["0","1"]])")), Error);
    auto ok = classmaps_from_json(json::parse(R"([[["1","0"],["0","1"]]])"));
    ASSERT_EQ(ok.size(), 1u);
    EXPECT_EQ(ok[0].phi, UnimodularQ::identity());
}

TEST(Json, ClassMapRoundTrip) {
    std::vector<ClassMap> maps{
        build_from_two_surfaces({1, 0}, {1, 2}, {2, 0}, {0, 1}),
        build_from_single_slope(Slope::parse("2/3"), Slope::parse("-1/4")),
        ClassMap::external(UnimodularQ(Rational(1, 3), 1, 0, 3)),
    };
    for (const auto& cm : maps) EXPECT_EQ(classmap_from_json(json::parse(to_json(cm).dump())), cm);
}

TEST(Json, CertificateRoundTrips) {
    Rng rng(81);
    for (int i = 0; i < 20; ++i) {
        std::vector<ClassMap> classes{ClassMap::external(random_mixed_sl2q(rng)),
                                      build_from_single_slope(random_slope(rng, 9), random_slope(rng, 9))};
        auto cert = c_distance(random_sl2z(rng, 3, 2), classes, 6);
        EXPECT_EQ(distance_certificate_from_json(json::parse(to_json(cert).dump())), cert);
    }
    std::vector<ClassMap> id{ClassMap::external(UnimodularQ::identity())};
    auto rep = collection_distance({{"x", {{UnimodularZ(0, 1, -1, 0), id}}}, {"y", {{UnimodularZ::identity(), id}}}}, 6);
    EXPECT_EQ(collection_report_from_json(json::parse(to_json(rep).dump())), rep);
    auto pb = power_bound(UnimodularZ(2, 1, 1, 1), UnimodularZ::identity(),
                          {ClassMap::external(UnimodularQ(Rational(1, 2), 0, 0, 2))});
    EXPECT_EQ(power_bound_report_from_json(json::parse(to_json(pb).dump())), pb);
}

TEST(Verify, EmittedCertificatesVerify) {
    auto g = run({"certify", "gluing", "--phi", "[[0,1],[-1,0]]", "--classes", "samples/id.json", "--bound", "20"});
    auto gf = scratch("gluing.json", g.output());
    auto v = run({"--verify", gf.string()});
    EXPECT_EQ(v.exit_code(), 0) << v.diagnostic;
    EXPECT_EQ(v.payload["verified"], true);

    auto spec = scratch("collection_spec.json", R"({"bound": 8, "orderings": [
        {"label": "a", "gluings": [{"phi": [[0,1],[-1,0]], "classes": [[["1","0"],["0","1"]]]}]},
        {"label": "b", "gluings": [{"phi": [[1,0],[0,1]], "classes": [[["1","0"],["0","1"]]]}]}]})");
    auto c = run({"certify", "collection", "--spec", spec.string()});
    ASSERT_EQ(c.exit_code(), 0) << c.diagnostic;
    EXPECT_EQ(c.payload["best"], 1);
    EXPECT_EQ(c.payload["search_bound"], 8);
    EXPECT_EQ(run({"--verify", scratch("collection.json", c.output()).string()}).exit_code(), 0);

    auto p = run({"anosov", "power", "--sigma", "[[2,1],[1,1]]", "--psi", "[[1,0],[0,1]]", "--classes", "samples/id.json"});
    EXPECT_EQ(run({"--verify", scratch("power.json", p.output()).string()}).exit_code(), 0);
}

TEST(Verify, TamperedFilesFail) {
    auto g = run({"certify", "gluing", "--phi", "[[0,1],[-1,0]]", "--classes", "samples/id.json", "--bound", "20"});
    json j = g.payload;
    j["per_class"][0]["result"]["empirical_min_displacement"] = 3;
    auto v = run({"--verify", scratch("bad_gluing.json", j.dump()).string()});
    EXPECT_EQ(v.exit_code(), 1);
    EXPECT_EQ(v.payload["error"], "verification-failed");

    json k = g.payload;
    k["c_distance_lower_bound"] = 0;
    EXPECT_EQ(run({"--verify", scratch("bad_gluing2.json", k.dump()).string()}).exit_code(), 1);

    auto p = run({"anosov", "power", "--sigma", "[[2,1],[1,1]]", "--psi", "[[1,0],[0,1]]", "--classes", "samples/id.json"});
    json q = p.payload;
    q["overall_N"] = 0;
    q["per_class"][0]["N"] = 0;
    EXPECT_EQ(run({"--verify", scratch("bad_power.json", q.dump()).string()}).exit_code(), 1);

    EXPECT_EQ(run({"--verify", scratch("unknown.json", R"({"kind": "mystery"})").string()}).exit_code(), 1);
}

TEST(Cli, Deterministic) {
    std::vector<std::string> args{"certify", "gluing", "--phi", "[[2,1],[1,1]]", "--classes", "samples/id.json", "--bound", "15"};
    EXPECT_EQ(run(args).output(), run(args).output());
}

TEST(Cli, BoundFromEnvironment) {
    ::setenv("SLOPECERT_BOUND", "7", 1);
    auto r = run({"certify", "gluing", "--phi", "[[0,1],[-1,0]]", "--classes", "samples/id.json"});
    ::unsetenv("SLOPECERT_BOUND");
    EXPECT_EQ(r.payload["search_bound"], 7);
    auto flag = run({"certify", "gluing", "--phi", "[[0,1],[-1,0]]", "--classes", "samples/id.json", "--bound", "9"});
    EXPECT_EQ(flag.payload["search_bound"], 9);
    EXPECT_EQ(run({"certify", "gluing", "--phi", "[[0,1],[-1,0]]", "--classes", "samples/id.json", "--bound", "0"}).exit_code(), 1);
}
