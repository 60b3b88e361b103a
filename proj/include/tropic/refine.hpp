#pragma once

/**
 * Preparing a curve against a complete fan: the recession-support
 * hypothesis, subdivision so that every edge and ray sits inside a single
 * cone, and global rescaling to integral length/weight ratios.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropic/curve.hpp"

namespace tropic {

struct RecessionCheck {
    bool supported = true;
    std::vector<std::string> offending_rays;
};

/// Every ray direction of the curve must be a ray of the fan.
inline RecessionCheck check_recession_support(const TropicalCurve& c, const Fan& f)
{
    require_same_dim(c.ambient_dim, f.ambient_dim(), "check_recession_support");
    RecessionCheck out;
    for (const auto& r : c.rays) {
        if (f.find_ray(r.direction)) continue;
        out.supported = false;
        out.offending_rays.push_back(r.id);
    }
    return out;
}

struct NewVertex {
    std::string id;
    std::string host;         // input edge or ray that was split
    RayIndices cone_before;   // cone holding the piece ending here
    RayIndices cone_after;    // cone holding the piece starting here

    friend bool operator==(const NewVertex&, const NewVertex&) = default;
};

struct SubdivisionRecord {
    TropicalCurve output;
    std::vector<NewVertex> new_vertices;
};

namespace detail {

inline std::vector<IntVec> wall_normals(const Fan& f)
{
    std::vector<IntVec> normals;
    for (std::size_t i = 0; i < f.cone_count(); ++i) {
        const auto& h = f.h_description(i);
        normals.insert(normals.end(), h.equations.begin(), h.equations.end());
        normals.insert(normals.end(), h.facets.begin(), h.facets.end());
    }
    for (auto& n : normals)
        if (n < IntVec(n.size(), Integer(0))) n = scale(n, Integer(-1));
    sort_unique(normals);
    return normals;
}

/// Sorted distinct parameters t in (0, upper) where start + t*step meets a
/// wall hyperplane transversally; upper = nullopt means unbounded.
inline std::vector<Rational> crossing_parameters(const std::vector<IntVec>& normals, const RatVec& start,
                                                 const RatVec& step, std::optional<Rational> upper)
{
    std::vector<Rational> ts;
    for (const auto& n : normals) {
        Rational denom = dot(n, step);
        if (denom == 0) continue;
        Rational t = -dot(n, start) / denom;
        if (t <= 0 || (upper && t >= *upper)) continue;
        ts.push_back(t);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

inline RatVec point_at(const RatVec& start, const RatVec& step, const Rational& t)
{
    return add(start, scale(step, t));
}

[[noreturn]] inline void not_in_support(const std::string& host)
{
    throw TropicError(ErrorCode::NotInSupport, "'" + host + "' leaves the support of the fan");
}

/**
 * Greedy merge of elementary pieces: keep a break only where no single cone
 * holds the run from the last kept break to the next candidate. `tail`
 * (a direction) closes a ray; for segments it is empty.
 */
inline std::vector<std::size_t> minimal_breaks(const Fan& f, const std::vector<RatVec>& pts,
                                               const std::optional<RatVec>& tail, const std::string& host)
{
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!common_cone(f, {pts[i], pts[i + 1]})) not_in_support(host);
    if (tail && !common_cone(f, {pts.back(), *tail})) not_in_support(host);

    std::vector<std::size_t> breaks;
    std::size_t start = 0;
    for (std::size_t j = 1; j < pts.size(); ++j) {
        if (common_cone(f, {pts[start], pts[j]})) continue;
        breaks.push_back(j - 1);
        start = j - 1;
    }
    if (tail && !common_cone(f, {pts[start], *tail})) breaks.push_back(pts.size() - 1);
    return breaks;
}

}  // namespace detail

/**
 * Inserts 2-valent vertices where edges and rays cross walls of the fan, so
 * that each output edge or ray lies in one cone. Crossing points are exact
 * intersections with the facet hyperplanes of the fan's cones; candidates
 * that do not actually separate two cones are merged away again.
 *
 * New vertices are named "<host>#k" in crossing order; the pieces of a split
 * edge become "<host>:0", "<host>:1", ...; a split ray keeps its id on the
 * unbounded tail. Requires the fan to cover every traversed point.
 */
inline SubdivisionRecord subdivide_along_fan(const TropicalCurve& c, const Fan& f)
{
    require_same_dim(c.ambient_dim, f.ambient_dim(), "subdivide_along_fan");
    require_valid(c);
    const auto normals = detail::wall_normals(f);
    SubdivisionRecord rec;
    rec.output.ambient_dim = c.ambient_dim;
    rec.output.vertices = c.vertices;
    for (const auto& [id, p] : c.vertices) smallest_containing_cone(f, p);

    auto add_vertex = [&](const std::string& id, const RatVec& p, const std::string& host, const RatVec& before,
                          const RatVec& after) {
        if (rec.output.vertices.count(id))
            throw TropicError(ErrorCode::InvalidCurve, "generated vertex id '" + id + "' already exists");
        rec.output.vertices.emplace(id, p);
        rec.new_vertices.push_back({id, host, f.cones()[smallest_containing_cone(f, before)],
                                    f.cones()[smallest_containing_cone(f, after)]});
    };

    for (const auto& e : c.edges) {
        const RatVec& a = c.position(e.u);
        RatVec step = sub(c.position(e.w), a);
        std::vector<Rational> ts{0};
        for (auto& t : detail::crossing_parameters(normals, a, step, Rational(1))) ts.push_back(t);
        ts.push_back(1);
        std::vector<RatVec> pts;
        for (const auto& t : ts) pts.push_back(detail::point_at(a, step, t));
        auto breaks = detail::minimal_breaks(f, pts, std::nullopt, e.id);
        if (breaks.empty()) {
            rec.output.edges.push_back(e);
            continue;
        }
        std::string prev = e.u;
        Rational prev_t = 0;
        for (std::size_t k = 0; k < breaks.size(); ++k) {
            const Rational& t = ts[breaks[k]];
            const Rational next_t = k + 1 < breaks.size() ? ts[breaks[k + 1]] : Rational(1);
            std::string id = e.id + "#" + std::to_string(k + 1);
            add_vertex(id, pts[breaks[k]], e.id, detail::point_at(a, step, (prev_t + t) / 2),
                       detail::point_at(a, step, (t + next_t) / 2));
            rec.output.edges.push_back({e.id + ":" + std::to_string(k), prev, id, e.weight});
            prev = id;
            prev_t = t;
        }
        rec.output.edges.push_back({e.id + ":" + std::to_string(breaks.size()), prev, e.w, e.weight});
    }

    for (const auto& r : c.rays) {
        const RatVec& a = c.position(r.base);
        RatVec step = r.direction.to_rational();
        std::vector<Rational> ts{0};
        for (auto& t : detail::crossing_parameters(normals, a, step, std::nullopt)) ts.push_back(t);
        std::vector<RatVec> pts;
        for (const auto& t : ts) pts.push_back(detail::point_at(a, step, t));
        auto breaks = detail::minimal_breaks(f, pts, step, r.id);
        std::string prev = r.base;
        Rational prev_t = 0;
        for (std::size_t k = 0; k < breaks.size(); ++k) {
            const Rational& t = ts[breaks[k]];
            const Rational next_t = k + 1 < breaks.size() ? ts[breaks[k + 1]] : t + 1;
            std::string id = r.id + "#" + std::to_string(k + 1);
            add_vertex(id, pts[breaks[k]], r.id, detail::point_at(a, step, (prev_t + t) / 2),
                       detail::point_at(a, step, (t + next_t) / 2));
            rec.output.edges.push_back({r.id + ":" + std::to_string(k), prev, id, r.weight});
            prev = id;
            prev_t = t;
        }
        rec.output.rays.push_back({r.id, prev, r.direction, r.weight});
    }

    for (const auto& e : rec.output.edges)
        if (!common_cone(f, {rec.output.position(e.u), rec.output.position(e.w)}))
            throw TropicError(ErrorCode::CertificateInconsistency, "edge '" + e.id + "' spans several cones");
    for (const auto& r : rec.output.rays)
        if (!common_cone(f, {rec.output.position(r.base), r.direction.to_rational()}))
            throw TropicError(ErrorCode::CertificateInconsistency, "ray '" + r.id + "' spans several cones");
    return rec;
}

struct RescaleResult {
    TropicalCurve curve;
    Integer multiplier;
};

/// Multiplies every position by the least N making all length/weight
/// ratios integral.
inline RescaleResult rescale_integral(const TropicalCurve& c)
{
    require_valid(c);
    Integer n = 1;
    for (const auto& e : c.edges) n = lcm(n, den(edge_data(c, e).length / Rational(e.weight)));
    RescaleResult out{c, n};
    for (auto& [id, p] : out.curve.vertices) p = scale(p, Rational(n));
    return out;
}

}  // namespace tropic
