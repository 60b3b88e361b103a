#pragma once

#include <sstream>
#include <string>

#include "tropic/curve.hpp"

namespace tropic {

namespace detail {

inline std::string coords_label(const RatVec& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p[i]);
    return s + ")";
}

inline std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

inline void emit_dot_body(std::ostringstream& out, const TropicalCurve& c, const std::vector<InfinityPoint>& at_infinity)
{
    for (const auto& [id, p] : c.vertices)
        out << "  " << quoted(id) << " [label=" << quoted(id + " " + coords_label(p)) << "];\n";
    for (const auto& e : c.edges)
        out << "  " << quoted(e.u) << " -> " << quoted(e.w) << " [dir=none, label="
            << quoted("w=" + e.weight.str() + ", l=" + to_string(edge_data(c, e).length)) << "];\n";
    for (const auto& r : c.rays) {
        std::string target = "inf:" + r.id;
        for (const auto& p : at_infinity)
            if (p.ray == r.id) target = p.id;
        out << "  " << quoted(target) << " [shape=point];\n";
        out << "  " << quoted(r.base) << " -> " << quoted(target) << " [label="
            << quoted("w=" + r.weight.str() + ", d=" + coords_label(r.direction.to_rational())) << "];\n";
    }
}

}  // namespace detail

/// Graphviz text: one node per vertex, undirected bounded edges, and one
/// arrow per ray ending at a point node that stands for its end at infinity.
inline std::string emit_dot(const TropicalCurve& c)
{
    std::ostringstream out;
    out << "digraph curve {\n";
    detail::emit_dot_body(out, c, {});
    out << "}\n";
    return out.str();
}

inline std::string emit_dot(const CompactifiedCurve& c)
{
    std::ostringstream out;
    out << "digraph curve {\n";
    detail::emit_dot_body(out, c.base, c.infinity_points);
    out << "}\n";
    return out.str();
}

}  // namespace tropic
