#pragma once

/**
 * Embedded tropical curves: a weighted graph in R^n whose bounded edges are
 * segments between rational vertex positions and whose rays carry an
 * explicit primitive direction. Bounded-edge directions are never stored;
 * they are always derived from the endpoint positions.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropic/fan.hpp"

namespace tropic {

struct BoundedEdge {
    std::string id;
    std::string u;  // first stored endpoint
    std::string w;  // second stored endpoint
    Integer weight;

    friend bool operator==(const BoundedEdge&, const BoundedEdge&) = default;
};

struct Ray {
    std::string id;
    std::string base;
    PrimitiveVec direction;
    Integer weight;

    friend bool operator==(const Ray&, const Ray&) = default;
};

struct TropicalCurve {
    std::size_t ambient_dim = 0;
    std::map<std::string, RatVec> vertices;
    std::vector<BoundedEdge> edges;
    std::vector<Ray> rays;

    const RatVec& position(const std::string& v) const
    {
        auto it = vertices.find(v);
        if (it == vertices.end()) throw TropicError(ErrorCode::NoSuchVertex, "no vertex '" + v + "'");
        return it->second;
    }

    const BoundedEdge& edge(const std::string& id) const
    {
        auto it = std::find_if(edges.begin(), edges.end(), [&](const BoundedEdge& e) { return e.id == id; });
        if (it == edges.end()) throw TropicError(ErrorCode::NoSuchEdge, "no bounded edge '" + id + "'");
        return *it;
    }

    /// Number of bounded-edge ends plus rays at v.
    std::size_t valence(const std::string& v) const
    {
        std::size_t n = 0;
        for (const auto& e : edges) n += (e.u == v) + (e.w == v);
        for (const auto& r : rays) n += (r.base == v);
        return n;
    }

    friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;
};

/// Lists every violated structural invariant; never throws.
inline ValidationReport validate(const TropicalCurve& c)
{
    ValidationReport report;
    if (c.ambient_dim == 0) report.fail("DimMismatch: ambient_dim must be positive");
    if (c.vertices.empty()) {
        report.fail("Disconnected: curve has no vertices");
        return report;
    }
    for (const auto& [id, p] : c.vertices)
        if (p.size() != c.ambient_dim) report.fail("DimMismatch: vertex '" + id + "' has wrong dimension");

    std::set<std::string> ids;
    auto fresh = [&](const std::string& id) {
        if (!ids.insert(id).second) report.fail("DuplicateId: '" + id + "' used twice");
    };

    for (const auto& e : c.edges) {
        fresh(e.id);
        if (e.weight <= 0) report.fail("NonpositiveWeight: edge '" + e.id + "'");
        bool ends_ok = true;
        for (const auto* end : {&e.u, &e.w}) {
            if (!c.vertices.count(*end)) {
                report.fail("NoSuchVertex: edge '" + e.id + "' ends at unknown vertex '" + *end + "'");
                ends_ok = false;
            }
        }
        if (ends_ok && c.vertices.at(e.u).size() == c.ambient_dim && c.vertices.at(e.w).size() == c.ambient_dim &&
            c.vertices.at(e.u) == c.vertices.at(e.w))
            report.fail("DegenerateEdge: edge '" + e.id + "' has zero length");
    }
    for (const auto& r : c.rays) {
        fresh(r.id);
        if (r.weight <= 0) report.fail("NonpositiveWeight: ray '" + r.id + "'");
        if (!c.vertices.count(r.base)) report.fail("NoSuchVertex: ray '" + r.id + "' based at unknown vertex");
        if (r.direction.size() != c.ambient_dim) report.fail("DimMismatch: ray '" + r.id + "' has wrong dimension");
    }

    // Connectivity of vertices + bounded edges.
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : c.edges) {
        if (!c.vertices.count(e.u) || !c.vertices.count(e.w)) continue;
        adj[e.u].push_back(e.w);
        adj[e.w].push_back(e.u);
    }
    std::set<std::string> seen{c.vertices.begin()->first};
    std::vector<std::string> stack{c.vertices.begin()->first};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        for (const auto& x : adj[v])
            if (seen.insert(x).second) stack.push_back(x);
    }
    if (seen.size() != c.vertices.size()) report.fail("Disconnected: underlying graph is not connected");
    return report;
}

inline void require_valid(const TropicalCurve& c)
{
    ValidationReport r = validate(c);
    if (!r.valid) throw TropicError(ErrorCode::InvalidCurve, r.violations.front());
}

struct EdgeData {
    PrimitiveVec direction;  // from the first stored endpoint to the second
    Rational length;         // lattice length: position(w) - position(u) = length * direction
};

inline EdgeData edge_data(const TropicalCurve& c, const BoundedEdge& e)
{
    RatVec diff = sub(c.position(e.w), c.position(e.u));
    if (is_zero(diff)) throw TropicError(ErrorCode::DegenerateEdge, "edge '" + e.id + "' has zero length");
    PrimitiveVec d = primitive(diff);
    return EdgeData{d, multiple_of(diff, d)};
}

inline EdgeData edge_data(const TropicalCurve& c, const std::string& edge_id)
{
    return edge_data(c, c.edge(edge_id));
}

struct BalanceReport {
    bool balanced = true;
    std::map<std::string, IntVec> defects;  // nonzero defects only
};

/// Weighted sum of primitive outgoing directions at every vertex.
inline BalanceReport is_balanced(const TropicalCurve& c)
{
    std::map<std::string, IntVec> sums;
    for (const auto& [id, p] : c.vertices) sums[id] = IntVec(c.ambient_dim, Integer(0));
    for (const auto& e : c.edges) {
        IntVec d = edge_data(c, e).direction.coords();
        for (std::size_t i = 0; i < c.ambient_dim; ++i) {
            sums[e.u][i] += e.weight * d[i];
            sums[e.w][i] -= e.weight * d[i];
        }
    }
    for (const auto& r : c.rays)
        for (std::size_t i = 0; i < c.ambient_dim; ++i) sums[r.base][i] += r.weight * r.direction[i];

    BalanceReport report;
    for (auto& [id, s] : sums) {
        if (is_zero(s)) continue;
        report.balanced = false;
        report.defects.emplace(id, std::move(s));
    }
    return report;
}

/// First Betti number of the underlying graph.
inline std::size_t genus(const TropicalCurve& c)
{
    if (c.edges.size() + 1 < c.vertices.size())
        throw TropicError(ErrorCode::InvalidCurve, "genus requires a connected curve");
    return c.edges.size() + 1 - c.vertices.size();
}

/// Distinct primitive ray directions (sorted) plus the origin cone.
inline Fan recession_fan(const TropicalCurve& c)
{
    std::vector<IntVec> dirs;
    for (const auto& r : c.rays) dirs.push_back(r.direction.coords());
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    std::vector<RayIndices> cones{{}};
    for (std::size_t i = 0; i < dirs.size(); ++i) cones.push_back({i});
    return Fan(c.ambient_dim, dirs, cones);
}

struct StarBranch {
    std::string id;  // edge or ray id
    PrimitiveVec direction;
    Integer weight;
};

/// The star of a vertex: its outgoing directions as a 1-dimensional fan at
/// the origin, with the incident weights kept per branch.
struct Star {
    Fan fan;
    std::vector<StarBranch> branches;
};

inline Star star(const TropicalCurve& c, const std::string& v)
{
    c.position(v);
    std::vector<StarBranch> branches;
    for (const auto& e : c.edges) {
        if (e.u != v && e.w != v) continue;
        PrimitiveVec d = edge_data(c, e).direction;
        if (e.u == v) branches.push_back({e.id, d, e.weight});
        if (e.w == v) {
            IntVec neg = d.coords();
            for (auto& x : neg) x = -x;
            branches.push_back({e.id, PrimitiveVec(neg), e.weight});
        }
    }
    for (const auto& r : c.rays)
        if (r.base == v) branches.push_back({r.id, r.direction, r.weight});

    std::vector<IntVec> dirs;
    for (const auto& b : branches) dirs.push_back(b.direction.coords());
    std::sort(dirs.begin(), dirs.end());
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    std::vector<RayIndices> cones{{}};
    for (std::size_t i = 0; i < dirs.size(); ++i) cones.push_back({i});
    return Star{Fan(c.ambient_dim, dirs, cones), std::move(branches)};
}

struct InfinityPoint {
    std::string id;   // "inf:<ray id>"
    std::string ray;  // the ray it closes off

    friend bool operator==(const InfinityPoint&, const InfinityPoint&) = default;
};

/// The curve with one 1-valent point at infinity adjoined per ray.
struct CompactifiedCurve {
    TropicalCurve base;
    std::vector<InfinityPoint> infinity_points;

    const TropicalCurve& forget() const noexcept { return base; }
};

inline CompactifiedCurve compactify(const TropicalCurve& c)
{
    CompactifiedCurve out{c, {}};
    for (const auto& r : c.rays) out.infinity_points.push_back({"inf:" + r.id, r.id});
    return out;
}

}  // namespace tropic
