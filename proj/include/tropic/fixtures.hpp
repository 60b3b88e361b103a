#pragma once

/**
 * Canonical example curves and fans. The JSON files under fixtures/ are
 * serializations of exactly these objects.
 */

#include <string>
#include <vector>

#include "tropic/curve.hpp"

namespace tropic::fixtures {

namespace detail {

inline RatVec at(std::initializer_list<long> xs)
{
    RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline PrimitiveVec dir(std::initializer_list<long> xs)
{
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return PrimitiveVec(v);
}

inline std::vector<IntVec> rays(std::initializer_list<std::initializer_list<long>> rs)
{
    std::vector<IntVec> out;
    for (auto r : rs) {
        IntVec v;
        for (long x : r) v.emplace_back(x);
        out.push_back(v);
    }
    return out;
}

}  // namespace detail

/// Vertex at the origin with rays +-(1,0).
inline TropicalCurve line()
{
    using namespace detail;
    TropicalCurve c;
    c.ambient_dim = 2;
    c.vertices["v0"] = at({0, 0});
    c.rays = {{"r0", "v0", dir({1, 0}), 1}, {"r1", "v0", dir({-1, 0}), 1}};
    return c;
}

inline TropicalCurve tripod()
{
    using namespace detail;
    TropicalCurve c;
    c.ambient_dim = 2;
    c.vertices["v0"] = at({0, 0});
    c.rays = {{"r0", "v0", dir({1, 0}), 1}, {"r1", "v0", dir({0, 1}), 1}, {"r2", "v0", dir({-1, -1}), 1}};
    return c;
}

/// Two rays only; defect (1,1) at the origin.
inline TropicalCurve unbal()
{
    using namespace detail;
    TropicalCurve c;
    c.ambient_dim = 2;
    c.vertices["v0"] = at({0, 0});
    c.rays = {{"r0", "v0", dir({1, 0}), 1}, {"r1", "v0", dir({0, 1}), 1}};
    return c;
}

/// Segment (0,0)-(2,0) of weight 2 flanked by weight-2 rays.
inline TropicalCurve segfan()
{
    using namespace detail;
    TropicalCurve c;
    c.ambient_dim = 2;
    c.vertices["v0"] = at({0, 0});
    c.vertices["v1"] = at({2, 0});
    c.edges = {{"e0", "v0", "v1", 2}};
    c.rays = {{"r0", "v0", dir({-1, 0}), 2}, {"r1", "v1", dir({1, 0}), 2}};
    return c;
}

/// Triangle (0,0),(1,0),(0,1) with balancing rays; genus 1 in R^2.
inline TropicalCurve cycle3()
{
    using namespace detail;
    TropicalCurve c;
    c.ambient_dim = 2;
    c.vertices["v0"] = at({0, 0});
    c.vertices["v1"] = at({1, 0});
    c.vertices["v2"] = at({0, 1});
    c.edges = {{"e0", "v0", "v1", 1}, {"e1", "v0", "v2", 1}, {"e2", "v1", "v2", 1}};
    c.rays = {{"r0", "v0", dir({-1, -1}), 1}, {"r1", "v1", dir({2, -1}), 1}, {"r2", "v2", dir({-1, 2}), 1}};
    return c;
}

/// cycle3 in the z=0 plane of R^3, with the ray at the origin split into
/// (-1,-1,-1) and (0,0,1). Genus 1, planar cycle, single departure.
inline TropicalCurve speyer3()
{
    using namespace detail;
    TropicalCurve c;
    c.ambient_dim = 3;
    c.vertices["v0"] = at({0, 0, 0});
    c.vertices["v1"] = at({1, 0, 0});
    c.vertices["v2"] = at({0, 1, 0});
    c.edges = {{"e0", "v0", "v1", 1}, {"e1", "v0", "v2", 1}, {"e2", "v1", "v2", 1}};
    c.rays = {{"r0", "v0", dir({-1, -1, -1}), 1},
              {"r1", "v0", dir({0, 0, 1}), 1},
              {"r2", "v1", dir({2, -1, 0}), 1},
              {"r3", "v2", dir({-1, 2, 0}), 1}};
    return c;
}

/// speyer3 with the in-plane ray at (1,0,0) also split out of the plane:
/// (2,-1,0) = (1,-1,-1) + (1,0,1). Two departures at distance 0.
inline TropicalCurve speyer3_rebalanced()
{
    using namespace detail;
    TropicalCurve c = speyer3();
    c.rays = {{"r0", "v0", dir({-1, -1, -1}), 1},
              {"r1", "v0", dir({0, 0, 1}), 1},
              {"r2a", "v1", dir({1, -1, -1}), 1},
              {"r2b", "v1", dir({1, 0, 1}), 1},
              {"r3", "v2", dir({-1, 2, 0}), 1}};
    return c;
}

/// Horizontal chain with weight-2 edges of lengths 3/2 and 5/3, so the
/// length/weight ratios are 3/4 and 5/6.
inline TropicalCurve ratios()
{
    using namespace detail;
    TropicalCurve c;
    c.ambient_dim = 2;
    c.vertices["v0"] = at({0, 0});
    c.vertices["v1"] = RatVec{Rational(3, 2), Rational(0)};
    c.vertices["v2"] = RatVec{Rational(19, 6), Rational(0)};
    c.edges = {{"e0", "v0", "v1", 2}, {"e1", "v1", "v2", 2}};
    c.rays = {{"r0", "v0", dir({-1, 0}), 2}, {"r1", "v2", dir({1, 0}), 2}};
    return c;
}

/// Segment (-1,-1)-(1,1) with balancing rays +-(1,1); crosses the origin.
inline TropicalCurve diagonal()
{
    using namespace detail;
    TropicalCurve c;
    c.ambient_dim = 2;
    c.vertices["v0"] = at({-1, -1});
    c.vertices["v1"] = at({1, 1});
    c.edges = {{"e0", "v0", "v1", 1}};
    c.rays = {{"r0", "v0", dir({-1, -1}), 1}, {"r1", "v1", dir({1, 1}), 1}};
    return c;
}

/// Fan of P^2.
inline Fan p2_fan()
{
    return Fan(2, detail::rays({{1, 0}, {0, 1}, {-1, -1}}), {{}, {0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}});
}

/// Fan of P^1 x P^1.
inline Fan p1xp1_fan()
{
    return Fan(2, detail::rays({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
               {{}, {0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

/// P^2 blown up along (1,1): rays (1,0),(1,1),(0,1),(-1,-1).
inline Fan p2_blowup_fan()
{
    return Fan(2, detail::rays({{1, 0}, {1, 1}, {0, 1}, {-1, -1}}),
               {{}, {0}, {1}, {2}, {3}, {0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

/// Complete fan of R^2 on the ray directions of cycle3.
inline Fan cycle3_fan()
{
    return Fan(2, detail::rays({{-1, -1}, {2, -1}, {-1, 2}}), {{}, {0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}});
}

/// Fan of P^3.
inline Fan p3_fan()
{
    return Fan(3, detail::rays({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}),
               {{},     {0},    {1},    {2},       {3},       {0, 1},    {0, 2},   {0, 3},
                {1, 2}, {1, 3}, {2, 3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// Face fan of the tetrahedron on the four ray directions of speyer3; the
/// origin is (a+b+c+d)/4, so the fan is complete.
inline Fan speyer3_fan()
{
    return Fan(3, detail::rays({{-1, -1, -1}, {0, 0, 1}, {2, -1, 0}, {-1, 2, 0}}),
               {{},     {0},    {1},    {2},       {3},       {0, 1},    {0, 2},   {0, 3},
                {1, 2}, {1, 3}, {2, 3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

}  // namespace tropic::fixtures
