#pragma once

/**
 * JSON interchange. Integral values are written as JSON numbers when they
 * fit in 64 bits and as decimal strings otherwise; non-integral rationals
 * are written as "p/q" strings. Readers accept either form. Objects are
 * keyed through std::map, so output is byte-stable.
 */

#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropic/defspace.hpp"
#include "tropic/degeneration.hpp"
#include "tropic/wellspaced.hpp"

namespace tropic::io {

using json = nlohmann::json;

[[noreturn]] inline void parse_error(const std::string& what) { throw TropicError(ErrorCode::ParseError, what); }

inline json to_json(const Rational& q)
{
    if (is_integral(q)) {
        Integer n = num(q);
        if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(n);
    }
    return to_string(q);
}

inline json to_json(const Integer& n) { return to_json(Rational(n)); }

inline json to_json(const RatVec& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline json to_json(const IntVec& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline json to_json(const RayIndices& idx)
{
    json a = json::array();
    for (auto i : idx) a.push_back(i);
    return a;
}

inline json to_json(const std::vector<IntVec>& m)
{
    json a = json::array();
    for (const auto& row : m) a.push_back(to_json(row));
    return a;
}

inline const json& field(const json& j, const char* key)
{
    if (!j.is_object()) parse_error(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) parse_error(std::string("missing field '") + key + "'");
    return *it;
}

inline Rational rational_from(const json& j)
{
    if (j.is_number_integer()) return j.is_number_unsigned() ? Rational(Integer(j.get<std::uint64_t>())) : Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    parse_error("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline Integer integer_from(const json& j)
{
    Rational q = rational_from(j);
    if (!is_integral(q)) parse_error("expected an integer, got " + j.dump());
    return num(q);
}

inline std::string string_from(const json& j)
{
    if (!j.is_string()) parse_error("expected a string, got " + j.dump());
    return j.get<std::string>();
}

inline std::size_t index_from(const json& j)
{
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) parse_error("expected a nonnegative index, got " + j.dump());
    return j.get<std::size_t>();
}

inline bool bool_from(const json& j)
{
    if (!j.is_boolean()) parse_error("expected a boolean, got " + j.dump());
    return j.get<bool>();
}

inline const json& array_from(const json& j)
{
    if (!j.is_array()) parse_error("expected an array, got " + j.dump());
    return j;
}

inline RatVec ratvec_from(const json& j)
{
    RatVec v;
    for (const auto& x : array_from(j)) v.push_back(rational_from(x));
    return v;
}

inline IntVec intvec_from(const json& j)
{
    IntVec v;
    for (const auto& x : array_from(j)) v.push_back(integer_from(x));
    return v;
}

inline RayIndices indices_from(const json& j)
{
    RayIndices v;
    for (const auto& x : array_from(j)) v.push_back(index_from(x));
    return v;
}

inline PrimitiveVec direction_from(const json& j)
{
    IntVec v = intvec_from(j);
    if (is_zero(v)) parse_error("zero direction " + j.dump());
    if (content(v) != 1) parse_error("direction " + j.dump() + " is not primitive");
    return PrimitiveVec(v);
}

inline std::size_t dim_from(const json& j)
{
    const json& d = field(j, "ambient_dim");
    if (!d.is_number_integer() || d.get<std::int64_t>() <= 0) parse_error("ambient_dim must be a positive integer");
    return d.get<std::size_t>();
}

// ---------------------------------------------------------------- curves

inline json to_json(const TropicalCurve& c)
{
    json j;
    j["ambient_dim"] = c.ambient_dim;
    j["vertices"] = json::array();
    for (const auto& [id, p] : c.vertices) j["vertices"].push_back({{"id", id}, {"coords", to_json(p)}});
    j["edges"] = json::array();
    for (const auto& e : c.edges)
        j["edges"].push_back({{"id", e.id}, {"ends", {e.u, e.w}}, {"weight", to_json(e.weight)}});
    j["rays"] = json::array();
    for (const auto& r : c.rays)
        j["rays"].push_back(
            {{"id", r.id}, {"base", r.base}, {"direction", to_json(r.direction.coords())}, {"weight", to_json(r.weight)}});
    return j;
}

inline TropicalCurve curve_from_json(const json& j)
{
    TropicalCurve c;
    c.ambient_dim = dim_from(j);
    for (const auto& v : array_from(field(j, "vertices"))) {
        std::string id = string_from(field(v, "id"));
        if (c.vertices.count(id)) parse_error("duplicate vertex id '" + id + "'");
        c.vertices[id] = ratvec_from(field(v, "coords"));
    }
    for (const auto& e : array_from(field(j, "edges"))) {
        const json& ends = array_from(field(e, "ends"));
        if (ends.size() != 2) parse_error("an edge needs exactly two ends");
        c.edges.push_back({string_from(field(e, "id")), string_from(ends[0]), string_from(ends[1]),
                           integer_from(field(e, "weight"))});
    }
    for (const auto& r : array_from(field(j, "rays")))
        c.rays.push_back({string_from(field(r, "id")), string_from(field(r, "base")), direction_from(field(r, "direction")),
                          integer_from(field(r, "weight"))});
    return c;
}

// ---------------------------------------------------------------- fans

inline json to_json(const Fan& f)
{
    json j;
    j["ambient_dim"] = f.ambient_dim();
    j["rays"] = json::array();
    for (const auto& r : f.rays()) j["rays"].push_back(to_json(r.coords()));
    j["cones"] = json::array();
    for (const auto& c : f.cones()) j["cones"].push_back(to_json(c));
    j["trusted_complete"] = f.trusted_complete();
    return j;
}

inline Fan fan_from_json(const json& j)
{
    std::size_t n = dim_from(j);
    std::vector<IntVec> rays;
    for (const auto& r : array_from(field(j, "rays"))) {
        IntVec v = intvec_from(r);
        if (v.size() != n) parse_error("fan ray " + r.dump() + " has the wrong dimension");
        if (is_zero(v)) parse_error("zero fan ray");
        rays.push_back(std::move(v));
    }
    std::vector<RayIndices> cones;
    for (const auto& c : array_from(field(j, "cones"))) cones.push_back(indices_from(c));
    bool trusted = j.contains("trusted_complete") ? bool_from(j["trusted_complete"]) : false;
    return Fan(n, rays, cones, trusted);
}

// ---------------------------------------------------------------- reports

inline json to_json(const ValidationReport& r)
{
    return {{"valid", r.valid}, {"violations", r.violations}, {"warnings", r.warnings}};
}

inline json to_json(const BalanceReport& r)
{
    json defects = json::object();
    for (const auto& [v, d] : r.defects) defects[v] = to_json(d);
    return {{"balanced", r.balanced}, {"defects", defects}};
}

inline json to_json(const StarBranch& b)
{
    return {{"id", b.id}, {"direction", to_json(b.direction.coords())}, {"weight", to_json(b.weight)}};
}

inline json to_json(const std::vector<StarBranch>& bs)
{
    json a = json::array();
    for (const auto& b : bs) a.push_back(to_json(b));
    return a;
}

inline std::vector<StarBranch> branches_from(const json& j)
{
    std::vector<StarBranch> out;
    for (const auto& b : array_from(j))
        out.push_back({string_from(field(b, "id")), direction_from(field(b, "direction")), integer_from(field(b, "weight"))});
    return out;
}

inline json to_json(const Star& s) { return {{"fan", to_json(s.fan)}, {"branches", to_json(s.branches)}}; }

inline json to_json(const CompactifiedCurve& c)
{
    json pts = json::array();
    for (const auto& p : c.infinity_points) pts.push_back({{"id", p.id}, {"ray", p.ray}});
    return {{"curve", to_json(c.base)}, {"infinity_points", pts}};
}

inline json to_json(const NewVertex& v)
{
    return {{"id", v.id}, {"host", v.host}, {"cone_before", to_json(v.cone_before)}, {"cone_after", to_json(v.cone_after)}};
}

inline json to_json(const std::vector<NewVertex>& vs)
{
    json a = json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

inline std::vector<NewVertex> new_vertices_from(const json& j)
{
    std::vector<NewVertex> out;
    for (const auto& v : array_from(j))
        out.push_back({string_from(field(v, "id")), string_from(field(v, "host")), indices_from(field(v, "cone_before")),
                       indices_from(field(v, "cone_after"))});
    return out;
}

inline json to_json(const SubdivisionRecord& s) { return {{"curve", to_json(s.output)}, {"subdivision", to_json(s.new_vertices)}}; }

inline json to_json(const RescaleResult& r) { return {{"curve", to_json(r.curve)}, {"multiplier", to_json(r.multiplier)}}; }

inline json to_json(const SuperabundanceVerdict& v)
{
    return {{"dimension", v.dimension}, {"expected", v.expected}, {"excess", v.excess}, {"superabundant", v.superabundant()}};
}

inline json defcone_report(const DeformationCone& cone, const SuperabundanceVerdict& v)
{
    json j = to_json(v);
    j["coordinates"] = cone.coordinates;
    j["equations"] = to_json(cone.equations);
    return j;
}

inline json to_json(const WellSpacedVerdict& v)
{
    json deps = json::array();
    for (const auto& d : v.departures) deps.push_back({{"vertex", d.vertex}, {"distance", to_json(d.distance)}});
    return {{"well_spaced", v.well_spaced}, {"span_codim", v.span_codim}, {"departures", deps}};
}

inline json to_json(const CertificateCheck& c) { return {{"ok", c.ok}, {"violations", c.violations}}; }

// ---------------------------------------------------------------- certificates

inline json to_json(const DualCurve& d)
{
    json comps = json::array(), nodes = json::array(), marked = json::array();
    for (const auto& c : d.components) comps.push_back({{"id", c.id}, {"vertex", c.vertex}});
    for (const auto& n : d.nodes) nodes.push_back({{"id", n.id}, {"edge", n.edge}, {"first", n.first}, {"second", n.second}});
    for (const auto& m : d.marked_points)
        marked.push_back(
            {{"id", m.id}, {"ray", m.ray}, {"component", m.component}, {"contact_order", to_json(m.contact_order)}});
    return {{"components", comps}, {"nodes", nodes}, {"marked_points", marked}};
}

inline DualCurve dual_curve_from_json(const json& j)
{
    DualCurve d;
    for (const auto& c : array_from(field(j, "components")))
        d.components.push_back({string_from(field(c, "id")), string_from(field(c, "vertex"))});
    for (const auto& n : array_from(field(j, "nodes")))
        d.nodes.push_back({string_from(field(n, "id")), string_from(field(n, "edge")), string_from(field(n, "first")),
                           string_from(field(n, "second"))});
    for (const auto& m : array_from(field(j, "marked_points")))
        d.marked_points.push_back({string_from(field(m, "id")), string_from(field(m, "ray")),
                                   string_from(field(m, "component")), integer_from(field(m, "contact_order"))});
    return d;
}

inline json to_json(const RealizationCertificate& cert)
{
    json j;
    j["curve"] = to_json(cert.rescaled_curve);
    j["fan"] = to_json(cert.fan);
    j["multiplier"] = to_json(cert.multiplier);
    j["subdivision"] = to_json(cert.subdivision);
    j["vertex_cones"] = json::object();
    for (const auto& [v, c] : cert.vertex_cones) j["vertex_cones"][v] = to_json(c);
    j["star_directions"] = json::object();
    for (const auto& [v, bs] : cert.star_directions) j["star_directions"][v] = to_json(bs);
    j["dual_curve"] = to_json(cert.dual_curve);
    j["node_data"] = json::array();
    for (const auto& nd : cert.node_data)
        j["node_data"].push_back({{"edge", nd.edge}, {"k", to_json(nd.k)}, {"rho", to_json(nd.rho)}, {"u_q", to_json(nd.u_q)}});
    json valuations = json::object(), positions = json::object();
    for (const auto& [e, q] : cert.base_point.edge_valuations) valuations[e] = to_json(q);
    for (const auto& [v, p] : cert.base_point.vertex_positions) positions[v] = to_json(p);
    j["base_point"] = {{"edge_valuations", valuations}, {"vertex_positions", positions}};
    return j;
}

inline const json& object_from(const json& j)
{
    if (!j.is_object()) parse_error("expected an object, got " + j.dump());
    return j;
}

inline RealizationCertificate certificate_from_json(const json& j)
{
    RealizationCertificate cert{curve_from_json(field(j, "curve")), fan_from_json(field(j, "fan")),
                                integer_from(field(j, "multiplier")), new_vertices_from(field(j, "subdivision")),
                                {}, {}, dual_curve_from_json(field(j, "dual_curve")), {}, {}};
    for (const auto& [v, c] : object_from(field(j, "vertex_cones")).items()) cert.vertex_cones[v] = indices_from(c);
    for (const auto& [v, bs] : object_from(field(j, "star_directions")).items()) cert.star_directions[v] = branches_from(bs);
    for (const auto& nd : array_from(field(j, "node_data")))
        cert.node_data.push_back({string_from(field(nd, "edge")), integer_from(field(nd, "k")), integer_from(field(nd, "rho")),
                                  intvec_from(field(nd, "u_q"))});
    const json& bp = field(j, "base_point");
    for (const auto& [e, q] : object_from(field(bp, "edge_valuations")).items())
        cert.base_point.edge_valuations[e] = rational_from(q);
    for (const auto& [v, p] : object_from(field(bp, "vertex_positions")).items())
        cert.base_point.vertex_positions[v] = ratvec_from(p);
    return cert;
}

// ---------------------------------------------------------------- files

inline json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        parse_error(std::string("malformed JSON: ") + e.what());
    }
}

inline json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) parse_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_text(text);
}

/// Wraps schema-level type errors from the JSON library as parse errors.
template <typename F>
auto guarded(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const json::exception& e) {
        parse_error(e.what());
    }
}

inline TropicalCurve read_curve(const std::string& path)
{
    return guarded([&] { return curve_from_json(read_file(path)); });
}

inline Fan read_fan(const std::string& path)
{
    return guarded([&] { return fan_from_json(read_file(path)); });
}

inline RealizationCertificate read_certificate(const std::string& path)
{
    return guarded([&] { return certificate_from_json(read_file(path)); });
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tropic::io
