#pragma once

/**
 * Exact polyhedral-cone primitives: the double description method (Motzkin's
 * incremental algorithm, with explicit lineality handling) and a phase-one
 * simplex feasibility test with Bland's rule.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tropic/linalg.hpp"

namespace tropic {

/// Generators of a polyhedral cone: lineality basis plus extreme rays of the
/// pointed part. Both lists are primitive integer vectors in canonical order.
struct VDescription {
    std::vector<IntVec> lineality;
    std::vector<IntVec> rays;
};

namespace detail {

inline RatVec combine(const std::vector<IntVec>& basis, const RatVec& coeffs, std::size_t dim)
{
    RatVec v(dim, Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) v[j] += coeffs[i] * basis[i][j];
    }
    return v;
}

/// Orthogonal projection of v onto the complement of span(basis).
inline RatVec project_out(const RatVec& v, const std::vector<IntVec>& basis)
{
    if (basis.empty()) return v;
    const std::size_t k = basis.size();
    RatMatrix gram(k, RatVec(k));
    RatVec rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        RatVec bi = to_rational(basis[i]);
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(bi, to_rational(basis[j]));
        rhs[i] = dot(bi, v);
    }
    auto c = solve(gram, rhs, k);
    RatVec out = v;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[j] -= (*c)[i] * basis[i][j];
    return out;
}

inline void sort_unique(std::vector<IntVec>& vs)
{
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

/// Motzkin double description in R^k starting from the whole space.
inline void motzkin(std::size_t k, const std::vector<RatVec>& inequalities, std::vector<RatVec>& lineality,
                    std::vector<RatVec>& rays)
{
    lineality.clear();
    rays.clear();
    for (std::size_t i = 0; i < k; ++i) {
        RatVec e(k, Rational(0));
        e[i] = 1;
        lineality.push_back(std::move(e));
    }
    std::vector<RatVec> processed;

    auto normalize = [](const RatVec& v) { return to_rational(primitive_multiple(v)); };

    for (const auto& a : inequalities) {
        if (is_zero(a)) continue;
        auto hit = std::find_if(lineality.begin(), lineality.end(), [&](const RatVec& l) { return dot(a, l) != 0; });
        if (hit != lineality.end()) {
            RatVec l0 = *hit;
            lineality.erase(hit);
            Rational al0 = dot(a, l0);
            if (al0 < 0) {
                l0 = scale(l0, Rational(-1));
                al0 = -al0;
            }
            for (auto& l : lineality) {
                Rational f = dot(a, l) / al0;
                if (f != 0) l = normalize(sub(l, scale(l0, f)));
            }
            for (auto& r : rays) {
                Rational f = dot(a, r) / al0;
                if (f != 0) r = normalize(sub(r, scale(l0, f)));
            }
            rays.push_back(normalize(l0));
            processed.push_back(a);
            continue;
        }

        std::vector<RatVec> pos, neg, zero;
        for (auto& r : rays) {
            Rational s = dot(a, r);
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
            else
                zero.push_back(r);
        }
        std::vector<RatVec> next = pos;
        next.insert(next.end(), zero.begin(), zero.end());
        if (k < lineality.size() + 2) {
            rays = std::move(next);
            processed.push_back(a);
            continue;
        }
        const std::size_t target = k - lineality.size() - 2;
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                RatMatrix tight;
                for (const auto& b : processed)
                    if (dot(b, p) == 0 && dot(b, n) == 0) tight.push_back(b);
                if (tight.size() < target) continue;
                if (rank(tight) != target) continue;
                RatVec combo = sub(scale(n, dot(a, p)), scale(p, dot(a, n)));
                next.push_back(normalize(combo));
            }
        }
        rays = std::move(next);
        processed.push_back(a);
    }
}

}  // namespace detail

/**
 * H-to-V conversion: generators of { x in R^dim : E x = 0, I x >= 0 }.
 *
 * The equations are eliminated first by passing to an integer basis of
 * ker E, so the incremental step only ever sees inequalities. Rays are
 * reported modulo lineality as their orthogonal projection onto the
 * lineality complement, which makes them canonical.
 */
inline VDescription double_description(const std::vector<IntVec>& equations,
                                       const std::vector<IntVec>& inequalities, std::size_t dim)
{
    RatMatrix eq;
    for (const auto& e : equations) {
        require_same_dim(e.size(), dim, "double_description equation");
        eq.push_back(to_rational(e));
    }
    std::vector<IntVec> basis = kernel_basis(eq, dim);
    const std::size_t k = basis.size();
    VDescription out;
    if (k == 0) return out;

    std::vector<RatVec> reduced;
    for (const auto& a : inequalities) {
        require_same_dim(a.size(), dim, "double_description inequality");
        RatVec r(k);
        for (std::size_t i = 0; i < k; ++i) r[i] = dot(a, basis[i]);
        reduced.push_back(std::move(r));
    }
    std::vector<RatVec> lin, rays;
    detail::motzkin(k, reduced, lin, rays);

    RatMatrix lin_ambient;
    for (const auto& l : lin) lin_ambient.push_back(detail::combine(basis, l, dim));
    out.lineality = row_space_basis(lin_ambient, dim);
    for (const auto& r : rays) {
        RatVec v = detail::project_out(detail::combine(basis, r, dim), out.lineality);
        if (is_zero(v)) continue;
        out.rays.push_back(primitive_multiple(v));
    }
    detail::sort_unique(out.rays);
    return out;
}

/// V-to-H data of the cone spanned by some generators: equations cut out
/// the linear span, facet normals live inside the span and point inward.
struct HDescription {
    std::vector<IntVec> equations;
    std::vector<IntVec> facets;

    bool contains(const RatVec& p) const
    {
        for (const auto& e : equations)
            if (dot(e, p) != 0) return false;
        for (const auto& f : facets)
            if (dot(f, p) < 0) return false;
        return true;
    }

    bool contains_relative_interior(const RatVec& p) const
    {
        for (const auto& e : equations)
            if (dot(e, p) != 0) return false;
        for (const auto& f : facets)
            if (dot(f, p) <= 0) return false;
        return true;
    }
};

/// Facets of cone(generators) via the double description of its dual.
inline HDescription facet_description(const std::vector<IntVec>& generators, std::size_t dim)
{
    VDescription dual = double_description({}, generators, dim);
    HDescription h;
    h.equations = dual.lineality;
    h.facets = dual.rays;
    return h;
}

/**
 * Exact feasibility of { lambda >= 0 : sum_i lambda_i g_i = p }.
 *
 * Phase-one simplex on a dense rational tableau with Bland's rule, so it
 * terminates on degenerate instances. Returns a witness lambda.
 */
inline std::optional<RatVec> nonnegative_combination(const std::vector<IntVec>& generators, const RatVec& p)
{
    const std::size_t rows = p.size();
    const std::size_t m = generators.size();
    for (const auto& g : generators) require_same_dim(g.size(), rows, "nonnegative_combination");
    const std::size_t cols = m + rows;  // structural + artificial
    RatMatrix t(rows, RatVec(cols + 1, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        Rational sign = p[i] < 0 ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < m; ++j) t[i][j] = sign * generators[j][i];
        t[i][m + i] = 1;
        t[i][cols] = sign * p[i];
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;
    RatVec reduced(cols + 1, Rational(0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < rows; ++i) reduced[j] -= t[i][j];
    for (std::size_t i = 0; i < rows; ++i) reduced[cols] -= t[i][cols];

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (reduced[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded direction; cannot happen for phase one
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        Rational f = reduced[enter];
        for (std::size_t j = 0; j <= cols; ++j) reduced[j] -= f * t[leave][j];
        basis[leave] = enter;
    }

    RatVec lambda(m, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] >= m) {
            if (t[i][cols] != 0) return std::nullopt;
        } else {
            lambda[basis[i]] = t[i][cols];
        }
    }
    return lambda;
}

}  // namespace tropic
