#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropic/curve.hpp"

namespace tropic::testing {

namespace detail {

inline IntVec random_direction(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> coord(-2, 2);
    for (;;) {
        IntVec v(n);
        for (auto& x : v) x = coord(rng);
        if (!is_zero(v)) return v;
    }
}

inline std::optional<TropicalCurve> try_trivalent_tree(std::mt19937& rng, std::size_t n, std::size_t vertex_count)
{
    std::uniform_int_distribution<int> length(1, 3), weight(1, 2), offset(-3, 3);
    TropicalCurve c;
    c.ambient_dim = n;
    std::vector<std::vector<IntVec>> outgoing(vertex_count);  // weighted, per vertex
    RatVec origin(n);
    for (auto& x : origin) x = offset(rng);
    c.vertices["v0"] = origin;

    for (std::size_t i = 1; i < vertex_count; ++i) {
        std::vector<std::size_t> open;
        for (std::size_t p = 0; p < i; ++p)
            if (outgoing[p].size() < 3) open.push_back(p);
        std::size_t p = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        IntVec weighted;
        if (outgoing[p].size() == 2) {
            weighted = scale(add(outgoing[p][0], outgoing[p][1]), Integer(-1));
            if (is_zero(weighted)) return std::nullopt;
        } else {
            weighted = scale(random_direction(rng, n), Integer(weight(rng)));
        }
        Integer w = content(weighted);
        IntVec d = weighted;
        for (auto& x : d) x /= w;
        std::string id = "v" + std::to_string(i);
        c.vertices[id] = add(c.vertices.at("v" + std::to_string(p)), scale(to_rational(d), Rational(length(rng))));
        c.edges.push_back({"e" + std::to_string(i - 1), "v" + std::to_string(p), id, w});
        outgoing[p].push_back(weighted);
        outgoing[i].push_back(scale(weighted, Integer(-1)));
    }

    std::size_t ray_count = 0;
    auto add_ray = [&](std::size_t v, const IntVec& weighted) {
        Integer w = content(weighted);
        IntVec d = weighted;
        for (auto& x : d) x /= w;
        c.rays.push_back({"r" + std::to_string(ray_count++), "v" + std::to_string(v), PrimitiveVec(d), w});
    };
    for (std::size_t v = 0; v < vertex_count; ++v) {
        IntVec sum(n, Integer(0));
        for (const auto& o : outgoing[v]) sum = add(sum, o);
        switch (outgoing[v].size()) {
        case 3:
            if (!is_zero(sum)) return std::nullopt;
            break;
        case 2:
            if (is_zero(sum)) return std::nullopt;
            add_ray(v, scale(sum, Integer(-1)));
            break;
        default: {
            IntVec first = scale(random_direction(rng, n), Integer(weight(rng)));
            IntVec second = scale(add(sum, first), Integer(-1));
            if (is_zero(second)) return std::nullopt;
            if (outgoing[v].empty()) {
                // isolated vertex: three rays
                IntVec third = random_direction(rng, n);
                second = scale(add(first, third), Integer(-1));
                if (is_zero(second)) return std::nullopt;
                add_ray(v, third);
            }
            add_ray(v, first);
            add_ray(v, second);
        }
        }
    }
    return c;
}

}  // namespace detail

/// Balanced trivalent tree with the given number of vertices in R^n.
inline TropicalCurve random_trivalent_tree(std::mt19937& rng, std::size_t n, std::size_t vertex_count)
{
    for (;;)
        if (auto c = detail::try_trivalent_tree(rng, n, vertex_count)) return *c;
}

}  // namespace tropic::testing
