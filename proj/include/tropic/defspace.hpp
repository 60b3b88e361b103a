#pragma once

/**
 * Deformation space of a fixed combinatorial type.
 *
 * Coordinates are the vertex positions (vertices sorted by id, n entries
 * each) followed by the bounded edge lengths (edges sorted by id). Every
 * bounded edge e = (u, w) contributes the n equations
 *     pos(w) - pos(u) - len(e) * d_e = 0,
 * and the cone is cut out by these together with len(e) >= 0.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropic/curve.hpp"
#include "tropic/linalg.hpp"
#include "tropic/polyhedral.hpp"

namespace tropic {

struct TypeEdge {
    std::string id;
    std::string u;
    std::string w;
    PrimitiveVec direction;
    Integer weight;

    friend bool operator==(const TypeEdge&, const TypeEdge&) = default;
};

struct TypeRay {
    std::string id;
    std::string base;
    PrimitiveVec direction;
    Integer weight;

    friend bool operator==(const TypeRay&, const TypeRay&) = default;
};

struct CombinatorialType {
    std::size_t ambient_dim = 0;
    std::vector<std::string> vertices;  // sorted
    std::vector<TypeEdge> edges;        // sorted by id
    std::vector<TypeRay> rays;          // sorted by id

    std::size_t genus() const { return edges.size() + 1 - vertices.size(); }

    std::size_t valence(const std::string& v) const
    {
        std::size_t k = 0;
        for (const auto& e : edges) k += (e.u == v) + (e.w == v);
        for (const auto& r : rays) k += r.base == v;
        return k;
    }

    friend bool operator==(const CombinatorialType&, const CombinatorialType&) = default;
};

inline CombinatorialType combinatorial_type(const TropicalCurve& c)
{
    require_valid(c);
    CombinatorialType t;
    t.ambient_dim = c.ambient_dim;
    for (const auto& [v, p] : c.vertices) t.vertices.push_back(v);
    for (const auto& e : c.edges) t.edges.push_back({e.id, e.u, e.w, edge_data(c, e).direction, e.weight});
    for (const auto& r : c.rays) t.rays.push_back({r.id, r.base, r.direction, r.weight});
    std::sort(t.edges.begin(), t.edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    std::sort(t.rays.begin(), t.rays.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return t;
}

/// { x in R^dim : equations * x = 0, x_i >= 0 for i in nonnegative }.
struct LinearCone {
    std::size_t dim = 0;
    IntMatrix equations;
    std::vector<std::size_t> nonnegative;
};

struct DeformationCone {
    std::size_t ambient_dim = 0;
    std::vector<std::string> coordinates;  // "pos(v)[i]" then "len(e)"
    IntMatrix equations;
    std::vector<std::size_t> length_coordinates;
    std::size_t dimension = 0;

    std::size_t coordinate_count() const { return coordinates.size(); }

    LinearCone linear_cone() const { return {coordinates.size(), equations, length_coordinates}; }

    bool satisfies(const RatVec& x) const
    {
        require_same_dim(x.size(), coordinates.size(), "deformation cone point");
        for (const auto& row : equations)
            if (dot(row, x) != 0) return false;
        return true;
    }
};

inline DeformationCone deformation_cone(const CombinatorialType& t)
{
    const std::size_t n = t.ambient_dim;
    DeformationCone cone;
    cone.ambient_dim = n;
    std::map<std::string, std::size_t> offset;
    for (const auto& v : t.vertices) {
        offset[v] = cone.coordinates.size();
        for (std::size_t i = 0; i < n; ++i) cone.coordinates.push_back("pos(" + v + ")[" + std::to_string(i) + "]");
    }
    for (const auto& e : t.edges) {
        cone.length_coordinates.push_back(cone.coordinates.size());
        cone.coordinates.push_back("len(" + e.id + ")");
    }
    const std::size_t total = cone.coordinates.size();
    for (std::size_t k = 0; k < t.edges.size(); ++k) {
        const TypeEdge& e = t.edges[k];
        for (std::size_t i = 0; i < n; ++i) {
            IntVec row(total, Integer(0));
            row[offset.at(e.w) + i] += 1;
            row[offset.at(e.u) + i] -= 1;
            row[cone.length_coordinates[k]] = -e.direction[i];
            cone.equations.push_back(std::move(row));
        }
    }
    RatMatrix a;
    for (const auto& row : cone.equations) a.push_back(to_rational(row));
    cone.dimension = kernel_dimension(a, total);
    return cone;
}

/// Coordinates of the curve in the cone of its own type; lengths are > 0.
inline RatVec point_of_curve(const TropicalCurve& c, const DeformationCone& cone)
{
    require_valid(c);
    RatVec x;
    for (const auto& [v, p] : c.vertices) x.insert(x.end(), p.begin(), p.end());
    std::vector<BoundedEdge> edges = c.edges;
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& e : edges) x.push_back(edge_data(c, e).length);
    if (x.size() != cone.coordinate_count() || !cone.satisfies(x))
        throw TropicError(ErrorCode::TypeMismatch, "curve does not satisfy the equations of the deformation cone");
    for (std::size_t i : cone.length_coordinates)
        if (x[i] <= 0) throw TropicError(ErrorCode::TypeMismatch, "nonpositive edge length");
    return x;
}

inline RatVec point_of_curve(const TropicalCurve& c)
{
    return point_of_curve(c, deformation_cone(combinatorial_type(c)));
}

/// ends + (n - 3)(1 - g) - sum over vertices of (valence - 3).
inline std::int64_t expected_dimension(const CombinatorialType& t, std::size_t genus, std::size_t ends)
{
    std::int64_t n = static_cast<std::int64_t>(t.ambient_dim);
    std::int64_t g = static_cast<std::int64_t>(genus);
    std::int64_t overvalence = 0;
    for (const auto& v : t.vertices) overvalence += static_cast<std::int64_t>(t.valence(v)) - 3;
    return static_cast<std::int64_t>(ends) + (n - 3) * (1 - g) - overvalence;
}

inline std::int64_t expected_dimension(const CombinatorialType& t)
{
    return expected_dimension(t, t.genus(), t.rays.size());
}

struct SuperabundanceVerdict {
    std::int64_t dimension = 0;
    std::int64_t expected = 0;
    std::int64_t excess = 0;

    bool superabundant() const { return excess > 0; }
};

inline SuperabundanceVerdict is_superabundant(const TropicalCurve& c)
{
    require_valid(c);
    BalanceReport b = is_balanced(c);
    if (!b.balanced) throw TropicError(ErrorCode::Unbalanced, "curve is not balanced at " + b.defects.begin()->first);
    CombinatorialType t = combinatorial_type(c);
    SuperabundanceVerdict v;
    v.dimension = static_cast<std::int64_t>(deformation_cone(t).dimension);
    v.expected = expected_dimension(t);
    v.excess = v.dimension - v.expected;
    return v;
}

inline constexpr std::size_t kMaxHilbertCoordinates = 10;
inline constexpr std::int64_t kMaxHilbertCoordinateSum = 25;

/**
 * The cone sigma, its dual in the ambient coordinates, and optionally the
 * Hilbert basis of the dual monoid Hom(sigma ∩ Λ, N), Λ = ker A ∩ Z^dim.
 *
 * The dual monoid lives in the lattice of functionals on Λ that vanish on
 * the lineality of sigma; `rank` is the rank of that lattice. Hilbert basis
 * elements are reported as integer functionals on the ambient space whose
 * restriction to Λ is the element, so pairing with points of sigma is the
 * ordinary dot product.
 */
struct BasicMonoidView {
    std::size_t dim = 0;
    VDescription cone;
    VDescription dual_cone;
    std::vector<IntVec> lattice_basis;
    std::size_t rank = 0;
    bool hilbert_requested = false;
    std::vector<IntVec> hilbert_basis;
    std::optional<TropicError> hilbert_error;
};

namespace detail {

using SmallVec = std::vector<std::int64_t>;

inline void enumerate_l1_ball(std::size_t dim, std::int64_t budget, SmallVec& cur, std::vector<SmallVec>& out)
{
    if (cur.size() == dim) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t x = -budget; x <= budget; ++x) {
        cur.push_back(x);
        enumerate_l1_ball(dim, budget - (x < 0 ? -x : x), cur, out);
        cur.pop_back();
    }
}

inline std::int64_t small_dot(const SmallVec& a, const SmallVec& b)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Irreducible elements of { z in Z^s : M z >= 0 } for injective M.
inline std::vector<SmallVec> hilbert_basis_of(const std::vector<SmallVec>& m, std::size_t s, std::int64_t bound)
{
    std::vector<SmallVec> points;
    SmallVec cur;
    enumerate_l1_ball(s, bound, cur, points);
    SmallVec grading(s, 0);
    for (const auto& row : m)
        for (std::size_t i = 0; i < s; ++i) grading[i] += row[i];
    auto in_monoid = [&](const SmallVec& z) {
        for (const auto& row : m)
            if (small_dot(row, z) < 0) return false;
        return true;
    };
    std::vector<std::pair<std::int64_t, SmallVec>> candidates;
    for (auto& z : points) {
        if (std::all_of(z.begin(), z.end(), [](std::int64_t x) { return x == 0; })) continue;
        if (in_monoid(z)) candidates.emplace_back(small_dot(grading, z), std::move(z));
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<SmallVec> basis;
    for (const auto& [deg, z] : candidates) {
        bool reducible = false;
        for (const auto& h : basis) {
            SmallVec diff(s);
            for (std::size_t i = 0; i < s; ++i) diff[i] = z[i] - h[i];
            if (in_monoid(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(z);
    }
    return basis;
}

inline std::int64_t to_small(const Integer& x)
{
    if (x > Integer(INT32_MAX) || x < Integer(INT32_MIN))
        throw TropicError(ErrorCode::TooLargeForHilbert, "entry out of enumeration range");
    return static_cast<std::int64_t>(x);
}

}  // namespace detail

inline BasicMonoidView basic_monoid(const LinearCone& lc, bool hilbert)
{
    const std::size_t dim = lc.dim;
    std::vector<IntVec> inequalities;
    for (std::size_t i : lc.nonnegative) {
        IntVec e(dim, Integer(0));
        e.at(i) = 1;
        inequalities.push_back(std::move(e));
    }
    BasicMonoidView view;
    view.dim = dim;
    view.hilbert_requested = hilbert;
    view.cone = double_description(lc.equations, inequalities, dim);
    view.dual_cone = double_description(view.cone.lineality, view.cone.rays, dim);
    view.lattice_basis = integer_kernel(lc.equations, dim);
    const std::size_t r = view.lattice_basis.size();

    // sigma's generators in coordinates of the lattice basis
    RatMatrix b(dim, RatVec(r));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < r; ++j) b[i][j] = view.lattice_basis[j][i];
    auto coords = [&](const IntVec& x) {
        std::optional<RatVec> c = solve(b, to_rational(x), r);
        if (!c || !std::all_of(c->begin(), c->end(), [](const Rational& q) { return is_integral(q); }))
            throw TropicError(ErrorCode::CertificateInconsistency, "cone generator outside the lattice");
        IntVec out;
        for (const auto& q : *c) out.push_back(num(q));
        return out;
    };
    IntMatrix lin_coords, ray_coords;
    for (const auto& l : view.cone.lineality) lin_coords.push_back(coords(l));
    for (const auto& ray : view.cone.rays) ray_coords.push_back(coords(ray));

    std::vector<IntVec> c = integer_kernel(lin_coords, r);
    view.rank = c.size();
    if (!hilbert) return view;
    if (dim > kMaxHilbertCoordinates) {
        view.hilbert_error = TropicError(ErrorCode::TooLargeForHilbert,
                                         std::to_string(dim) + " coordinates exceed the bound of " +
                                             std::to_string(kMaxHilbertCoordinates));
        return view;
    }
    const std::size_t s = c.size();
    if (s == 0) return view;

    std::vector<IntVec> m;
    for (const auto& rc : ray_coords) {
        IntVec row(s);
        for (std::size_t t = 0; t < s; ++t) row[t] = dot(c[t], rc);
        m.push_back(std::move(row));
    }
    VDescription q = double_description({}, m, s);
    if (!q.lineality.empty())
        throw TropicError(ErrorCode::CertificateInconsistency, "dual monoid is not sharp");
    Integer sum = 0;
    for (const auto& v : q.rays)
        for (const auto& x : v) sum += abs(x);
    if (sum > kMaxHilbertCoordinateSum) {
        view.hilbert_error = TropicError(ErrorCode::TooLargeForHilbert,
                                         "coordinate sum " + sum.str() + " exceeds the enumeration bound of " +
                                             std::to_string(kMaxHilbertCoordinateSum));
        return view;
    }
    std::vector<detail::SmallVec> small_m;
    for (const auto& row : m) {
        detail::SmallVec sr;
        for (const auto& x : row) sr.push_back(detail::to_small(x));
        small_m.push_back(std::move(sr));
    }

    IntMatrix bt = view.lattice_basis;
    for (const auto& z : detail::hilbert_basis_of(small_m, s, static_cast<std::int64_t>(sum))) {
        IntVec functional(r, Integer(0));
        for (std::size_t t = 0; t < s; ++t)
            for (std::size_t j = 0; j < r; ++j) functional[j] += z[t] * c[t][j];
        std::optional<IntVec> lift = integer_solve(bt, functional, dim);
        if (!lift) throw TropicError(ErrorCode::CertificateInconsistency, "functional does not lift to Z^dim");
        for (const auto& ray : view.cone.rays)
            if (dot(*lift, ray) < 0)
                throw TropicError(ErrorCode::CertificateInconsistency, "Hilbert basis element negative on the cone");
        for (const auto& l : view.cone.lineality)
            if (dot(*lift, l) != 0)
                throw TropicError(ErrorCode::CertificateInconsistency, "Hilbert basis element not constant on lineality");
        view.hilbert_basis.push_back(std::move(*lift));
    }
    return view;
}

inline BasicMonoidView basic_monoid(const CombinatorialType& t, bool hilbert)
{
    return basic_monoid(deformation_cone(t).linear_cone(), hilbert);
}

}  // namespace tropic
