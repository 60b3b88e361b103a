#pragma once

/**
 * Well-spacedness of genus-one curves, tested against the affine span H of
 * the cycle: among the vertices where the curve leaves H, the minimal
 * lattice distance to the cycle (measured inside H) must be attained at
 * least twice.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropic/curve.hpp"
#include "tropic/linalg.hpp"

namespace tropic {

struct CycleData {
    std::vector<std::string> vertices;  // in cyclic order, starting at the smallest id
    std::vector<std::string> edges;     // edges[i] joins vertices[i] and vertices[i+1 mod k]
    RatVec base_point;
    std::vector<IntVec> direction_basis;
    std::size_t codim = 0;

    bool contains(const RatVec& p) const
    {
        RatVec d = sub(p, base_point);
        return direction_contains(d);
    }

    bool direction_contains(const RatVec& d) const
    {
        if (is_zero(d)) return true;
        RatMatrix m;
        for (const auto& b : direction_basis) m.push_back(to_rational(b));
        std::size_t before = rank(m);
        m.push_back(d);
        return rank(m) == before;
    }
};

inline CycleData cycle(const TropicalCurve& c)
{
    require_valid(c);
    std::size_t g = genus(c);
    if (g != 1) throw TropicError(ErrorCode::GenusNotOne, "genus is " + std::to_string(g));

    std::set<std::string> alive;
    for (const auto& [v, p] : c.vertices) alive.insert(v);
    std::set<std::string> live_edges;
    for (const auto& e : c.edges) live_edges.insert(e.id);
    for (bool pruned = true; pruned;) {
        pruned = false;
        std::map<std::string, std::size_t> degree;
        for (const auto& e : c.edges)
            if (live_edges.count(e.id)) ++degree[e.u], ++degree[e.w];
        for (auto it = alive.begin(); it != alive.end();) {
            if (degree[*it] <= 1) {
                for (const auto& e : c.edges)
                    if (e.u == *it || e.w == *it) live_edges.erase(e.id);
                it = alive.erase(it);
                pruned = true;
            } else {
                ++it;
            }
        }
    }

    CycleData data;
    std::string at = *alive.begin();
    std::string previous_edge;
    do {
        data.vertices.push_back(at);
        for (const auto& e : c.edges) {
            if (!live_edges.count(e.id) || e.id == previous_edge) continue;
            if (e.u != at && e.w != at) continue;
            data.edges.push_back(e.id);
            previous_edge = e.id;
            at = e.u == at ? e.w : e.u;
            break;
        }
    } while (at != data.vertices.front());

    data.base_point = c.position(data.vertices.front());
    RatMatrix directions;
    for (const auto& id : data.edges) directions.push_back(edge_data(c, id).direction.to_rational());
    data.direction_basis = row_space_basis(directions, c.ambient_dim);
    data.codim = c.ambient_dim - data.direction_basis.size();
    return data;
}

struct Departure {
    std::string vertex;
    Rational distance;

    friend bool operator==(const Departure&, const Departure&) = default;
};

struct WellSpacedVerdict {
    bool well_spaced = true;
    std::size_t span_codim = 0;
    std::vector<Departure> departures;  // sorted by distance, then vertex id
};

inline WellSpacedVerdict well_spaced(const TropicalCurve& c)
{
    CycleData cyc = cycle(c);
    WellSpacedVerdict verdict;
    verdict.span_codim = cyc.codim;
    if (cyc.codim == 0) return verdict;

    std::map<std::string, bool> in_h;
    for (const auto& [v, p] : c.vertices) in_h[v] = cyc.contains(p);

    // Dijkstra from the cycle through edges lying in H.
    std::map<std::string, Rational> dist;
    for (const auto& v : cyc.vertices) dist[v] = 0;
    std::set<std::string> done;
    for (;;) {
        std::optional<std::string> next;
        for (const auto& [v, d] : dist)
            if (!done.count(v) && (!next || d < dist.at(*next))) next = v;
        if (!next) break;
        done.insert(*next);
        for (const auto& e : c.edges) {
            if (e.u != *next && e.w != *next) continue;
            if (!in_h.at(e.u) || !in_h.at(e.w)) continue;
            const std::string& other = e.u == *next ? e.w : e.u;
            Rational candidate = dist.at(*next) + edge_data(c, e).length;
            auto it = dist.find(other);
            if (it == dist.end() || candidate < it->second) dist[other] = candidate;
        }
    }

    for (const auto& [v, d] : dist) {
        bool leaves = false;
        for (const auto& e : c.edges)
            if ((e.u == v && !in_h.at(e.w)) || (e.w == v && !in_h.at(e.u))) leaves = true;
        for (const auto& r : c.rays)
            if (r.base == v && !cyc.direction_contains(r.direction.to_rational())) leaves = true;
        if (leaves) verdict.departures.push_back({v, d});
    }
    std::sort(verdict.departures.begin(), verdict.departures.end(), [](const Departure& a, const Departure& b) {
        return a.distance != b.distance ? a.distance < b.distance : a.vertex < b.vertex;
    });
    if (verdict.departures.size() == 1) verdict.well_spaced = false;
    if (verdict.departures.size() >= 2)
        verdict.well_spaced = verdict.departures[0].distance == verdict.departures[1].distance;
    return verdict;
}

}  // namespace tropic
