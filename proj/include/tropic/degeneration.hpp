#pragma once

/**
 * Combinatorics of the special fiber: the dual nodal curve, contact orders
 * at the marked points, the node monoids and node slopes, and the
 * realization certificate that bundles them with the cone data of the fan.
 *
 * Orientation: a bounded edge stored as (u, w) has v1 = u and v2 = w, so
 * the node slope is u_q = (v1 - v2) / rho = -k * d with d the primitive
 * direction from u to w. Flipping the stored order negates u_q.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropic/refine.hpp"

namespace tropic {

struct Component {
    std::string id;      // "C:<vertex>"
    std::string vertex;  // the vertex of the tropical curve it stands for

    friend bool operator==(const Component&, const Component&) = default;
};

struct Node {
    std::string id;      // "q:<edge>"
    std::string edge;
    std::string first;   // component of the first stored endpoint
    std::string second;  // component of the second stored endpoint

    friend bool operator==(const Node&, const Node&) = default;
};

struct MarkedPoint {
    std::string id;  // "p:<ray>"
    std::string ray;
    std::string component;
    Integer contact_order;

    friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// One rational component per vertex, one node per bounded edge, one marked
/// point per ray. The `vertex`/`edge`/`ray` fields are the explicit
/// isomorphism with the graph of the curve.
struct DualCurve {
    std::vector<Component> components;
    std::vector<Node> nodes;
    std::vector<MarkedPoint> marked_points;

    friend bool operator==(const DualCurve&, const DualCurve&) = default;
};

inline std::string component_id(const std::string& vertex) { return "C:" + vertex; }

inline void require_balanced(const TropicalCurve& c)
{
    BalanceReport b = is_balanced(c);
    if (!b.balanced)
        throw TropicError(ErrorCode::Unbalanced, "curve is unbalanced at vertex '" + b.defects.begin()->first + "'");
}

inline DualCurve dual_curve(const TropicalCurve& c)
{
    require_valid(c);
    require_balanced(c);
    DualCurve d;
    for (const auto& [v, p] : c.vertices) d.components.push_back({component_id(v), v});
    for (const auto& e : c.edges) d.nodes.push_back({"q:" + e.id, e.id, component_id(e.u), component_id(e.w)});
    for (const auto& r : c.rays) d.marked_points.push_back({"p:" + r.id, r.id, component_id(r.base), r.weight});
    return d;
}

/**
 * The pushout of N <-diag- N -(*k)-> N, i.e. the monoid
 * { (n1, n2) in N^2 : n2 - n1 in kZ }, generated by (1,1), (k,0), (0,k).
 */
class NodeMonoid {
public:
    explicit NodeMonoid(Integer k) : k_(std::move(k))
    {
        if (k_ <= 0) throw TropicError(ErrorCode::NonIntegralRatio, "node monoid parameter must be positive");
    }

    const Integer& k() const noexcept { return k_; }

    std::vector<IntVec> generators() const
    {
        return {IntVec{1, 1}, IntVec{k_, 0}, IntVec{0, k_}};
    }

    bool contains(const Integer& n1, const Integer& n2) const
    {
        if (n1 < 0 || n2 < 0) return false;
        Integer diff = n2 - n1;
        return diff % k_ == 0;
    }

private:
    Integer k_;
};

/// Requires length/weight to be a positive integer (rescale first).
inline NodeMonoid node_monoid(const Rational& length, const Integer& weight)
{
    if (weight <= 0 || length <= 0)
        throw TropicError(ErrorCode::NonIntegralRatio, "length and weight must be positive");
    Rational k = length / Rational(weight);
    if (!is_integral(k))
        throw TropicError(ErrorCode::NonIntegralRatio,
                          "length/weight = " + to_string(k) + " is not an integer; rescale the curve first");
    return NodeMonoid(num(k));
}

/// u_q = (position(v1) - position(v2)) / rho for the rescaled curve.
inline IntVec node_slope(const TropicalCurve& c, const BoundedEdge& e)
{
    RatVec diff = sub(c.position(e.u), c.position(e.w));
    IntVec out;
    for (const auto& x : diff) {
        Rational q = x / Rational(e.weight);
        if (!is_integral(q))
            throw TropicError(ErrorCode::CertificateInconsistency,
                              "node slope of edge '" + e.id + "' is not integral; the curve was not rescaled");
        out.push_back(num(q));
    }
    return out;
}

inline IntVec node_slope(const TropicalCurve& c, const std::string& edge_id) { return node_slope(c, c.edge(edge_id)); }

struct NodeDatum {
    std::string edge;
    Integer k;    // rescaled length / weight
    Integer rho;  // weight
    IntVec u_q;

    friend bool operator==(const NodeDatum&, const NodeDatum&) = default;
};

/// The curve as a point of its deformation cone, read off before rescaling:
/// each node's smoothing parameter gets valuation length/weight.
struct BasePoint {
    std::map<std::string, Rational> edge_valuations;
    std::map<std::string, RatVec> vertex_positions;

    friend bool operator==(const BasePoint&, const BasePoint&) = default;
};

struct RealizationCertificate {
    TropicalCurve rescaled_curve;
    Fan fan;
    Integer multiplier;
    std::vector<NewVertex> subdivision;
    std::map<std::string, RayIndices> vertex_cones;
    // Directions the refined cone at each vertex must contain as rays.
    std::map<std::string, std::vector<StarBranch>> star_directions;
    DualCurve dual_curve;
    std::vector<NodeDatum> node_data;
    BasePoint base_point;
};

namespace detail {

inline std::vector<BoundedEdge> edges_by_id(const TropicalCurve& c)
{
    std::vector<BoundedEdge> edges = c.edges;
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return edges;
}

inline bool same_branches(const std::vector<StarBranch>& a, const std::vector<StarBranch>& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].id != b[i].id || a[i].direction != b[i].direction || a[i].weight != b[i].weight) return false;
    return true;
}

}  // namespace detail

/**
 * Runs the whole preparation: subdivision along the fan, integral
 * rescaling, dual curve, cone of every vertex, per-node data and the base
 * point. The fan is validated unless it is marked trusted.
 */
inline RealizationCertificate certify(const TropicalCurve& c, const Fan& f)
{
    require_valid(c);
    require_balanced(c);
    RecessionCheck rc = check_recession_support(c, f);
    if (!rc.supported)
        throw TropicError(ErrorCode::RecessionNotSupported,
                          "ray '" + rc.offending_rays.front() + "' is not along a ray of the fan");
    if (!f.trusted_complete()) {
        ValidationReport fv = fan_validate(f);
        if (!fv.valid) throw TropicError(ErrorCode::InvalidFan, fv.violations.front());
    }

    SubdivisionRecord sub = subdivide_along_fan(c, f);
    RescaleResult scaled = rescale_integral(sub.output);
    const TropicalCurve& hat = scaled.curve;

    RealizationCertificate cert{hat, f, scaled.multiplier, sub.new_vertices, {}, {}, dual_curve(hat), {}, {}};
    for (const auto& [v, p] : hat.vertices) {
        cert.vertex_cones[v] = f.cones()[smallest_containing_cone(f, p)];
        cert.star_directions[v] = star(hat, v).branches;
    }
    for (const auto& e : detail::edges_by_id(hat)) {
        NodeMonoid q = node_monoid(edge_data(hat, e).length, e.weight);
        cert.node_data.push_back({e.id, q.k(), e.weight, node_slope(hat, e)});
        cert.base_point.edge_valuations[e.id] = edge_data(sub.output, e.id).length / Rational(e.weight);
    }
    cert.base_point.vertex_positions = sub.output.vertices;
    return cert;
}

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string why)
    {
        ok = false;
        violations.push_back(std::move(why));
    }
};

/// Re-derives every field from the rescaled curve and the fan and reports
/// each disagreement by name.
inline CertificateCheck verify_certificate(const RealizationCertificate& cert)
{
    CertificateCheck check;
    const TropicalCurve& hat = cert.rescaled_curve;
    ValidationReport vr = validate(hat);
    if (!vr.valid) {
        check.fail("curve: " + vr.violations.front());
        return check;
    }
    if (!is_balanced(hat).balanced) check.fail("curve: unbalanced");
    if (hat.ambient_dim != cert.fan.ambient_dim()) {
        check.fail("fan: dimension differs from the curve");
        return check;
    }
    if (cert.multiplier <= 0) check.fail("multiplier: not positive");

    // Dual graph isomorphism and contact orders.
    const DualCurve& d = cert.dual_curve;
    if (d.components.size() != hat.vertices.size()) check.fail("dual_curve: component count != vertex count");
    for (const auto& comp : d.components) {
        if (!hat.vertices.count(comp.vertex) || comp.id != component_id(comp.vertex))
            check.fail("dual_curve: component '" + comp.id + "' does not match a vertex");
    }
    if (d.nodes.size() != hat.edges.size()) check.fail("dual_curve: node count != bounded edge count");
    for (const auto& node : d.nodes) {
        auto it = std::find_if(hat.edges.begin(), hat.edges.end(), [&](const auto& e) { return e.id == node.edge; });
        if (it == hat.edges.end() || node.first != component_id(it->u) || node.second != component_id(it->w))
            check.fail("dual_curve: node '" + node.id + "' does not join the components of edge '" + node.edge + "'");
    }
    if (d.marked_points.size() != hat.rays.size()) check.fail("dual_curve: marked point count != ray count");
    for (const auto& mp : d.marked_points) {
        auto it = std::find_if(hat.rays.begin(), hat.rays.end(), [&](const auto& r) { return r.id == mp.ray; });
        if (it == hat.rays.end() || mp.component != component_id(it->base)) {
            check.fail("dual_curve: marked point '" + mp.id + "' is not on the component of ray '" + mp.ray + "'");
            continue;
        }
        if (mp.contact_order != it->weight)
            check.fail("dual_curve: contact order of '" + mp.id + "' differs from the weight of ray '" + mp.ray + "'");
    }

    // Cone data.
    for (const auto& [v, p] : hat.vertices) {
        auto it = cert.vertex_cones.find(v);
        try {
            if (it == cert.vertex_cones.end() || it->second != cert.fan.cones()[smallest_containing_cone(cert.fan, p)])
                check.fail("vertex_cones[" + v + "]: not the cone holding the vertex in its relative interior");
        } catch (const TropicError&) {
            check.fail("vertex_cones[" + v + "]: vertex outside the fan support");
        }
        auto st = cert.star_directions.find(v);
        if (st == cert.star_directions.end() || !detail::same_branches(st->second, star(hat, v).branches))
            check.fail("star_directions[" + v + "]: does not match the star of the vertex");
    }
    if (cert.vertex_cones.size() != hat.vertices.size()) check.fail("vertex_cones: wrong number of entries");
    for (const auto& e : hat.edges)
        if (!common_cone(cert.fan, {hat.position(e.u), hat.position(e.w)}))
            check.fail("curve: edge '" + e.id + "' is not inside a single cone");
    for (const auto& r : hat.rays)
        if (!common_cone(cert.fan, {hat.position(r.base), r.direction.to_rational()}))
            check.fail("curve: ray '" + r.id + "' is not inside a single cone");

    // Node data: k * omega = length, rho * u_q = v1 - v2.
    if (cert.node_data.size() != hat.edges.size()) check.fail("node_data: wrong number of entries");
    for (const auto& nd : cert.node_data) {
        auto it = std::find_if(hat.edges.begin(), hat.edges.end(), [&](const auto& e) { return e.id == nd.edge; });
        if (it == hat.edges.end()) {
            check.fail("node_data[" + nd.edge + "]: no such edge");
            continue;
        }
        if (nd.rho != it->weight) check.fail("node_data[" + nd.edge + "]: rho differs from the edge weight");
        if (Rational(nd.k * it->weight) != edge_data(hat, *it).length)
            check.fail("node_data[" + nd.edge + "]: k * weight differs from the rescaled length");
        RatVec diff = sub(hat.position(it->u), hat.position(it->w));
        if (nd.u_q.size() != diff.size() || scale(to_rational(nd.u_q), Rational(nd.rho)) != diff)
            check.fail("node_data[" + nd.edge + "]: rho * u_q differs from v1 - v2");
        auto val = cert.base_point.edge_valuations.find(nd.edge);
        if (val == cert.base_point.edge_valuations.end() || Rational(nd.k) != val->second * Rational(cert.multiplier))
            check.fail("node_data[" + nd.edge + "]: k differs from multiplier * base valuation");
    }

    // Base point: the unscaled curve, with valuations length / weight.
    const BasePoint& bp = cert.base_point;
    if (bp.vertex_positions.size() != hat.vertices.size()) check.fail("base_point: wrong number of vertex positions");
    for (const auto& [v, p] : hat.vertices) {
        auto it = bp.vertex_positions.find(v);
        if (it == bp.vertex_positions.end() || scale(it->second, Rational(cert.multiplier)) != p)
            check.fail("base_point: position of '" + v + "' times the multiplier differs from the rescaled curve");
    }
    if (bp.edge_valuations.size() != hat.edges.size()) check.fail("base_point: wrong number of edge valuations");
    if (check.ok) {
        TropicalCurve base = hat;
        base.vertices = bp.vertex_positions;
        for (const auto& e : hat.edges) {
            auto it = bp.edge_valuations.find(e.id);
            if (it == bp.edge_valuations.end() || it->second != edge_data(base, e).length / Rational(e.weight))
                check.fail("base_point: valuation of '" + e.id + "' differs from length / weight");
        }
    }
    return check;
}

}  // namespace tropic
