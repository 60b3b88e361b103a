#include <gtest/gtest.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "tropic/cli.hpp"
#include "tropic/fixtures.hpp"

using namespace tropic;
using namespace tropic::testing;
namespace fx = tropic::fixtures;
using io::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;

    json report() const { return json::parse(out); }
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return fixture_path(name); }

std::string scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "tropic_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string write_scratch(const std::string& name, const std::string& text)
{
    std::string path = scratch(name);
    std::ofstream(path) << text;
    return path;
}

const std::vector<std::string> kCurveFiles = {"line.json",   "tripod.json", "unbal.json",
                                              "segfan.json", "cycle3.json", "speyer3.json",
                                              "speyer3_rebalanced.json",    "ratios.json", "diagonal.json"};

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST(Cli, CheckTripod)
{
    Result r = run({"check", fixture("tripod.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.report()["balanced"].get<bool>());
}

TEST(Cli, CheckUnbalanced)
{
    Result r = run({"check", fixture("unbal.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.report()["balanced"].get<bool>());
    EXPECT_EQ(r.report()["defects"]["v0"], json::parse("[1,1]"));
}

TEST(Cli, Superabundant)
{
    Result r = run({"superabundant", fixture("speyer3.json")});
    EXPECT_EQ(r.code, 1);
    json j = r.report();
    EXPECT_EQ(j["dimension"], 4);
    EXPECT_EQ(j["expected"], 3);
    EXPECT_EQ(j["excess"], 1);
    EXPECT_EQ(run({"superabundant", fixture("cycle3.json")}).code, 0);
}

TEST(Cli, Defcone)
{
    Result r = run({"defcone", fixture("speyer3.json")});
    EXPECT_EQ(r.code, 0);
    json j = r.report();
    EXPECT_EQ(j["equations"].size(), 9u);
    EXPECT_EQ(j["coordinates"].size(), 12u);
    EXPECT_EQ(j["coordinates"][11], "len(e2)");
    EXPECT_EQ(run({"defcone", fixture("speyer3.json"), "--expect-ordinary"}).code, 1);
    EXPECT_EQ(run({"defcone", fixture("cycle3.json"), "--expect-ordinary"}).code, 0);
}

TEST(Cli, SmallQueries)
{
    EXPECT_EQ(run({"genus", fixture("cycle3.json")}).report()["genus"], 1);
    EXPECT_EQ(run({"recession", fixture("tripod.json")}).report()["fan"]["rays"].size(), 3u);
    Result star = run({"star", fixture("speyer3.json"), "--vertex", "v0"});
    EXPECT_EQ(star.code, 0);
    EXPECT_EQ(star.report()["branches"].size(), 4u);
    EXPECT_EQ(run({"star", fixture("tripod.json"), "--vertex", "nope"}).report()["error"], "NoSuchVertex");
    EXPECT_EQ(run({"compactify", fixture("tripod.json")}).report()["infinity_points"].size(), 3u);
    Result rescale = run({"rescale", fixture("ratios.json")});
    EXPECT_EQ(rescale.report()["multiplier"], 12);
    Result sub = run({"subdivide", fixture("diagonal.json"), "--fan", fixture("p2.json")});
    EXPECT_EQ(sub.code, 0);
    EXPECT_EQ(sub.report()["subdivision"].size(), 1u);
}

TEST(Cli, Wellspaced)
{
    Result r = run({"wellspaced", fixture("speyer3.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.report(), json::parse(R"({"well_spaced":false,"span_codim":1,"departures":[{"vertex":"v0","distance":0}]})"));
    EXPECT_EQ(run({"wellspaced", fixture("speyer3_rebalanced.json")}).code, 0);
    EXPECT_EQ(run({"wellspaced", fixture("cycle3.json")}).code, 0);
    Result tree = run({"wellspaced", fixture("tripod.json")});
    EXPECT_EQ(tree.code, 1);
    EXPECT_EQ(tree.report()["error"], "GenusNotOne");
}

TEST(Cli, CertifySegfan)
{
    Result r = run({"certify", fixture("segfan.json"), "--fan", fixture("p1xp1.json")});
    EXPECT_EQ(r.code, 0);
    json nd = r.report()["node_data"];
    ASSERT_EQ(nd.size(), 1u);
    EXPECT_EQ(nd[0]["k"], 1);
    EXPECT_EQ(nd[0]["rho"], 2);
    EXPECT_EQ(nd[0]["u_q"], json::parse("[-1,0]"));
}

TEST(Cli, CertifyErrors)
{
    Result r = run({"certify", fixture("tripod.json"), "--fan", fixture("p1xp1.json")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.report()["error"], "RecessionNotSupported");
    EXPECT_EQ(run({"certify", fixture("unbal.json"), "--fan", fixture("p2.json")}).report()["error"], "Unbalanced");
    EXPECT_EQ(run({"certify", fixture("tripod.json"), "--fan", fixture("p2.json"), "--trust-fan"}).code, 0);
}

TEST(Cli, CertificateRoundTripThroughFiles)
{
    std::string path = scratch("cycle3.cert.json");
    Result made = run({"certify", fixture("cycle3.json"), "--fan", fixture("cycle3_fan.json"), "--out", path});
    ASSERT_EQ(made.code, 0);
    EXPECT_TRUE(made.out.empty());
    Result ok = run({"verify-cert", path});
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(ok.report()["ok"].get<bool>());

    json cert = io::read_file(path);
    cert["node_data"][0]["u_q"][0] = cert["node_data"][0]["u_q"][0].get<int>() + 1;
    Result bad = run({"verify-cert", write_scratch("tampered.json", cert.dump())});
    EXPECT_EQ(bad.code, 1);
    EXPECT_FALSE(bad.report()["ok"].get<bool>());
    EXPECT_NE(bad.report()["violations"][0].get<std::string>().find("e0"), std::string::npos);
}

TEST(Cli, MalformedInputExitsTwo)
{
    const std::vector<std::string> bodies = {
        "",
        "{",
        "[1,2,3]",
        R"({"ambient_dim": 2})",
        R"({"ambient_dim": "two", "vertices": [], "edges": [], "rays": []})",
        R"({"ambient_dim": 2, "vertices": [{"id": "v0", "coords": [0.5, 0]}], "edges": [], "rays": []})",
        R"({"ambient_dim": 2, "vertices": [{"id": "v0", "coords": ["1/0", 0]}], "edges": [], "rays": []})",
        R"({"ambient_dim": 2, "vertices": [{"id": "v0", "coords": [0, 0]}], "edges": [],
            "rays": [{"id": "r0", "base": "v0", "direction": [2, 0], "weight": 1}]})",
        R"({"ambient_dim": 2, "vertices": [{"id": "v0", "coords": [0, 0]}], "edges": [{"id": "e0", "ends": ["v0"], "weight": 1}], "rays": []})",
        R"({"ambient_dim": 2, "vertices": [{"id": "v0", "coords": [0, 0]}, {"id": "v0", "coords": [1, 0]}], "edges": [], "rays": []})",
    };
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        std::string path = write_scratch("bad" + std::to_string(i) + ".json", bodies[i]);
        for (const std::string& cmd : {"check", "genus", "defcone", "wellspaced"}) {
            Result r = run({cmd, path});
            EXPECT_EQ(r.code, 2) << i << " " << cmd;
            EXPECT_EQ(r.report()["error"], "ParseError") << i;
        }
        EXPECT_EQ(run({"verify-cert", path}).code, 2) << i;
        EXPECT_EQ(run({"certify", fixture("tripod.json"), "--fan", path}).code, 2) << i;
    }
    EXPECT_EQ(run({"check", scratch("does-not-exist.json")}).code, 2);
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate", fixture("tripod.json")}).code, 2);
    EXPECT_EQ(run({"certify", fixture("tripod.json")}).code, 2);
    EXPECT_EQ(run({"star", fixture("tripod.json")}).code, 2);
    EXPECT_EQ(run({"compactify", fixture("tripod.json"), "--emit", "svg"}).code, 2);
    EXPECT_EQ(run({"check"}).code, 2);
}

TEST(Cli, DotEmission)
{
    Result r = run({"compactify", fixture("tripod.json"), "--emit", "dot"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
    EXPECT_EQ(count(r.out, "shape=point"), 3u);
    Result sub = run({"subdivide", fixture("diagonal.json"), "--fan", fixture("p2.json"), "--emit", "dot"});
    EXPECT_NE(sub.out.find("e0#1"), std::string::npos);
}

TEST(Cli, EveryCommandOnEveryFixtureIsDeterministicAndFast)
{
    for (const auto& file : kCurveFiles) {
        std::vector<std::vector<std::string>> commands = {
            {"check"},  {"genus"},         {"recession"},  {"compactify"},
            {"rescale"}, {"defcone"},      {"superabundant"}, {"wellspaced"},
            {"subdivide", "--fan", fixture(file.rfind("speyer3", 0) == 0 ? "p3.json" : "p2.json")},
            {"certify", "--fan", fixture(file.rfind("speyer3", 0) == 0 ? "speyer3_fan.json" : "p2.json")},
            {"star", "--vertex", "v0"},
        };
        for (auto cmd : commands) {
            cmd.insert(cmd.begin() + 1, fixture(file));
            auto start = std::chrono::steady_clock::now();
            Result a = run(cmd);
            double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            Result b = run(cmd);
            EXPECT_TRUE(a.code == 0 || a.code == 1) << cmd[0] << " " << file;
            EXPECT_EQ(a.code, b.code);
            EXPECT_EQ(a.out, b.out) << cmd[0] << " " << file;
            EXPECT_LT(seconds, 5.0) << cmd[0] << " " << file;
            EXPECT_NO_THROW((void)a.report());
        }
    }
}

TEST(Cli, Selftest)
{
    ::setenv("TROPIC_FIXTURES", TROPIC_FIXTURE_DIR, 1);
    Result r = run({"selftest"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.report()["ok"].get<bool>());
    ::unsetenv("TROPIC_FIXTURES");
    EXPECT_EQ(run({"selftest"}).code, 2);
}

TEST(Io, FixtureFilesMatchBuiltins)
{
    std::vector<std::pair<std::string, TropicalCurve>> curves = {
        {"line.json", fx::line()},       {"tripod.json", fx::tripod()},   {"unbal.json", fx::unbal()},
        {"segfan.json", fx::segfan()},   {"cycle3.json", fx::cycle3()},   {"speyer3.json", fx::speyer3()},
        {"speyer3_rebalanced.json", fx::speyer3_rebalanced()},             {"ratios.json", fx::ratios()},
        {"diagonal.json", fx::diagonal()}};
    for (const auto& [file, c] : curves) EXPECT_EQ(io::read_curve(fixture(file)), c) << file;
    std::vector<std::pair<std::string, Fan>> fans = {
        {"p2.json", fx::p2_fan()},           {"p1xp1.json", fx::p1xp1_fan()}, {"p2_blowup.json", fx::p2_blowup_fan()},
        {"cycle3_fan.json", fx::cycle3_fan()}, {"p3.json", fx::p3_fan()},     {"speyer3_fan.json", fx::speyer3_fan()}};
    for (const auto& [file, f] : fans) EXPECT_EQ(io::read_fan(fixture(file)), f) << file;
}

TEST(Io, CurveRoundTrip)
{
    for (const auto& file : kCurveFiles) {
        TropicalCurve c = io::read_curve(fixture(file));
        EXPECT_EQ(io::curve_from_json(io::to_json(c)), c) << file;
        EXPECT_EQ(io::curve_from_json(json::parse(io::to_json(c).dump())), c) << file;
    }
}

TEST(Io, RationalEncoding)
{
    EXPECT_EQ(io::to_json(Rational(3, 4)), "3/4");
    EXPECT_EQ(io::to_json(Rational(-6, 3)), -2);
    Integer big = Integer(1) << 80;
    EXPECT_EQ(io::to_json(Rational(big)), big.str());
    EXPECT_EQ(io::rational_from(io::to_json(Rational(big))), Rational(big));
    EXPECT_EQ(io::rational_from(json("-5/10")), Rational(-1, 2));
    EXPECT_THROW(io::rational_from(json(0.5)), TropicError);
}

TEST(Io, CertificateRoundTrip)
{
    RealizationCertificate cert = certify(fx::diagonal(), fx::p2_blowup_fan());
    json j = io::to_json(cert);
    EXPECT_EQ(io::to_json(io::certificate_from_json(j)), j);
    EXPECT_EQ(j["subdivision"].size(), 1u);
}

TEST(Dot, Counts)
{
    std::string tripod = emit_dot(fx::tripod());
    EXPECT_EQ(count(tripod, "[label=\"v"), 1u);
    EXPECT_EQ(count(tripod, "shape=point"), 3u);

    std::string segfan = emit_dot(fx::segfan());
    EXPECT_EQ(count(segfan, "[label=\"v"), 2u);
    EXPECT_EQ(count(segfan, "dir=none"), 1u);
    EXPECT_NE(segfan.find("\"w=2, l=2\""), std::string::npos);

    std::string speyer = emit_dot(fx::speyer3());
    EXPECT_EQ(count(speyer, "[label=\"v"), 3u);
    EXPECT_EQ(count(speyer, "dir=none"), 3u);
    EXPECT_EQ(count(speyer, "shape=point"), 4u);
    EXPECT_EQ(speyer, emit_dot(fx::speyer3()));
    EXPECT_EQ(emit_dot(compactify(fx::speyer3())), emit_dot(fx::speyer3()));
}
