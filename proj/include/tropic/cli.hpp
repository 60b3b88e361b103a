#pragma once

/**
 * The `tropic` command line. `run` takes the arguments after the program
 * name and returns the exit status: 0 when the command succeeds or the
 * checked property holds, 1 when it fails or the input is rejected by the
 * library, 2 on malformed input or usage errors.
 */

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tropic/dot.hpp"
#include "tropic/io.hpp"

namespace tropic::cli {

using io::json;

inline constexpr int kOk = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

struct RunConfig {
    std::string input;
    std::string fan;
    std::string vertex;
    std::string out;
    std::string emit = "json";
    bool trust_fan = false;
    bool expect_ordinary = false;
};

struct Outcome {
    int code = kOk;
    std::string text;
};

namespace detail {

inline Outcome report(const json& j, bool holds = true) { return {holds ? kOk : kFails, io::dump(j)}; }

inline Outcome curve_output(const RunConfig& cfg, const json& j, const TropicalCurve& c)
{
    return cfg.emit == "dot" ? Outcome{kOk, emit_dot(c)} : report(j);
}

inline Fan load_fan(const RunConfig& cfg)
{
    Fan f = io::read_fan(cfg.fan);
    if (cfg.trust_fan && !f.trusted_complete()) {
        std::vector<IntVec> rays;
        for (const auto& r : f.rays()) rays.push_back(r.coords());
        f = Fan(f.ambient_dim(), rays, f.cones(), true);
    }
    return f;
}

inline Outcome selftest(std::ostream& err)
{
    const char* dir = std::getenv("TROPIC_FIXTURES");
    if (!dir) throw TropicError(ErrorCode::ParseError, "TROPIC_FIXTURES is not set");
    const std::string root = dir;
    json expected = io::read_file(root + "/expected.json");
    json cases = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, const std::vector<std::string>& mismatches) {
        bool ok = mismatches.empty();
        all_ok = all_ok && ok;
        cases.push_back({{"name", name}, {"ok", ok}, {"mismatches", mismatches}});
        if (!ok) err << "selftest: " << name << ": " << mismatches.front() << "\n";
    };
    for (const auto& [file, want] : io::object_from(io::field(expected, "curves")).items()) {
        std::vector<std::string> bad;
        try {
            TropicalCurve c = io::read_curve(root + "/" + file);
            json got;
            got["valid"] = validate(c).valid;
            got["balanced"] = is_balanced(c).balanced;
            if (got["valid"].get<bool>()) {
                got["genus"] = genus(c);
                if (got["balanced"].get<bool>()) {
                    json v = io::to_json(is_superabundant(c));
                    for (const char* key : {"dimension", "expected", "excess"}) got[key] = v[key];
                    if (genus(c) == 1) got["well_spaced"] = well_spaced(c).well_spaced;
                }
            }
            for (const auto& [key, value] : want.items()) {
                if (!got.contains(key))
                    bad.push_back(key + ": not computed");
                else if (got[key] != value)
                    bad.push_back(key + ": expected " + value.dump() + ", got " + got[key].dump());
            }
        } catch (const TropicError& e) {
            bad.push_back(e.what());
        }
        record(file, bad);
    }
    for (const auto& pair : io::array_from(io::field(expected, "certify"))) {
        std::string curve = io::string_from(io::field(pair, "curve")), fan = io::string_from(io::field(pair, "fan"));
        std::vector<std::string> bad;
        try {
            RealizationCertificate cert = certify(io::read_curve(root + "/" + curve), io::read_fan(root + "/" + fan));
            CertificateCheck check = verify_certificate(io::certificate_from_json(io::to_json(cert)));
            if (!check.ok) bad.push_back(check.violations.front());
        } catch (const TropicError& e) {
            bad.push_back(e.what());
        }
        record(curve + " / " + fan, bad);
    }
    return report({{"ok", all_ok}, {"cases", cases}}, all_ok);
}

}  // namespace detail

inline Outcome dispatch(const std::string& command, const RunConfig& cfg, std::ostream& err)
{
    using detail::report;
    if (command == "selftest") return detail::selftest(err);
    if (command == "verify-cert") {
        CertificateCheck check = verify_certificate(io::read_certificate(cfg.input));
        return report(io::to_json(check), check.ok);
    }

    TropicalCurve c = io::read_curve(cfg.input);
    if (command == "check") {
        ValidationReport v = validate(c);
        json j = io::to_json(v);
        bool balanced = false;
        if (v.valid) {
            BalanceReport b = is_balanced(c);
            j.update(io::to_json(b));
            balanced = b.balanced;
        }
        return report(j, v.valid && balanced);
    }
    if (command == "genus") {
        require_valid(c);
        return report({{"genus", genus(c)}});
    }
    if (command == "recession") {
        require_valid(c);
        return report({{"fan", io::to_json(recession_fan(c))}});
    }
    if (command == "star") {
        require_valid(c);
        return report(io::to_json(star(c, cfg.vertex)));
    }
    if (command == "compactify") {
        require_valid(c);
        CompactifiedCurve cc = compactify(c);
        return cfg.emit == "dot" ? Outcome{kOk, emit_dot(cc)} : report(io::to_json(cc));
    }
    if (command == "subdivide") {
        SubdivisionRecord s = subdivide_along_fan(c, detail::load_fan(cfg));
        return detail::curve_output(cfg, io::to_json(s), s.output);
    }
    if (command == "rescale") {
        RescaleResult r = rescale_integral(c);
        return detail::curve_output(cfg, io::to_json(r), r.curve);
    }
    if (command == "defcone") {
        SuperabundanceVerdict v = is_superabundant(c);
        json j = io::defcone_report(deformation_cone(combinatorial_type(c)), v);
        return report(j, !(cfg.expect_ordinary && v.superabundant()));
    }
    if (command == "superabundant") {
        SuperabundanceVerdict v = is_superabundant(c);
        return report(io::to_json(v), !v.superabundant());
    }
    if (command == "wellspaced") {
        WellSpacedVerdict v = well_spaced(c);
        return report(io::to_json(v), v.well_spaced);
    }
    if (command == "certify") {
        RealizationCertificate cert = certify(c, detail::load_fan(cfg));
        return detail::curve_output(cfg, io::to_json(cert), cert.rescaled_curve);
    }
    throw TropicError(ErrorCode::ParseError, "unknown command '" + command + "'");
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact combinatorics of embedded tropical curves", "tropic"};
    app.require_subcommand(1);
    RunConfig cfg;

    struct Command {
        const char* name;
        const char* help;
        bool needs_input = true;
        bool needs_fan = false;
        bool needs_vertex = false;
        bool curve_output = false;
    };
    const std::vector<Command> commands = {
        {"check", "validate the curve and test the balancing condition"},
        {"genus", "first Betti number of the underlying graph"},
        {"recession", "fan of the ray directions"},
        {"star", "star of a vertex", true, false, true},
        {"compactify", "adjoin a point at infinity for every ray", true, false, false, true},
        {"subdivide", "subdivide so every edge and ray lies in one cone of a fan", true, true, false, true},
        {"rescale", "scale to integral length/weight ratios", true, false, false, true},
        {"defcone", "deformation cone of the combinatorial type"},
        {"superabundant", "compare the deformation dimension with the expected one"},
        {"wellspaced", "well-spacedness of a genus-one curve"},
        {"certify", "build a realization certificate against a fan", true, true, false, true},
        {"verify-cert", "re-check a realization certificate"},
        {"selftest", "run the fixture suite in $TROPIC_FIXTURES", false},
    };
    std::string chosen;
    for (const auto& s : commands) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        if (s.needs_input) sub->add_option("input", cfg.input, "input JSON file")->required();
        if (s.needs_fan) {
            sub->add_option("--fan", cfg.fan, "fan JSON file")->required();
            sub->add_flag("--trust-fan", cfg.trust_fan, "treat the fan as complete and skip its validation");
        }
        if (s.needs_vertex) sub->add_option("--vertex", cfg.vertex, "vertex id")->required();
        if (std::string(s.name) == "defcone")
            sub->add_flag("--expect-ordinary", cfg.expect_ordinary, "exit 1 if the curve is superabundant");
        sub->add_option("--out", cfg.out, "write the report here instead of stdout");
        if (s.curve_output)
            sub->add_option("--emit", cfg.emit, "output format")->check(CLI::IsMember({"json", "dot"}));
        sub->callback([&chosen, name = std::string(s.name)] { chosen = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Outcome result;
    try {
        result = dispatch(chosen, cfg, err);
    } catch (const TropicError& e) {
        int code = e.code() == ErrorCode::ParseError ? kUsage : kFails;
        json j = {{"error", to_string(e.code())}, {"message", e.what()}};
        result = {code, io::dump(j)};
        err << "tropic: " << e.what() << "\n";
    } catch (const std::exception& e) {
        json j = {{"error", "Internal"}, {"message", e.what()}};
        result = {kFails, io::dump(j)};
        err << "tropic: " << e.what() << "\n";
    }

    if (cfg.out.empty()) {
        out << result.text;
    } else {
        std::ofstream file(cfg.out);
        if (!file) {
            err << "tropic: cannot write '" << cfg.out << "'\n";
            return kUsage;
        }
        file << result.text;
    }
    return result.code;
}

}  // namespace tropic::cli
