#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "tropic/polyhedral.hpp"

namespace tropic {

/// Facet enumeration is only attempted at desk scale.
inline constexpr std::size_t kMaxFacetAmbientDim = 6;
inline constexpr std::size_t kMaxFacetGenerators = 32;

/// Nonzero integer vector whose entries have gcd 1.
class PrimitiveVec {
public:
    explicit PrimitiveVec(const IntVec& v)
    {
        if (v.empty() || is_zero(v)) throw TropicError(ErrorCode::ZeroDirection, "primitive of the zero vector");
        Integer g = content(v);
        coords_ = v;
        for (auto& x : coords_) x /= g;
    }

    const IntVec& coords() const noexcept { return coords_; }
    std::size_t size() const noexcept { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    RatVec to_rational() const { return tropic::to_rational(coords_); }

    friend bool operator==(const PrimitiveVec&, const PrimitiveVec&) = default;
    friend auto operator<=>(const PrimitiveVec& a, const PrimitiveVec& b) { return a.coords_ <=> b.coords_; }

private:
    IntVec coords_;
};

inline PrimitiveVec primitive(const IntVec& v) { return PrimitiveVec(v); }

/// Primitive vector in the direction of a nonzero rational vector.
inline PrimitiveVec primitive(const RatVec& v)
{
    if (is_zero(v)) throw TropicError(ErrorCode::ZeroDirection, "primitive of the zero vector");
    return PrimitiveVec(primitive_multiple(v));
}

/// Returns g with v = g * primitive(v); requires v to be a positive multiple.
inline Rational multiple_of(const RatVec& v, const PrimitiveVec& d)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (d[i] != 0) return v[i] / Rational(d[i]);
    return 0;
}

/// Rational polyhedral cone, the nonnegative span of its generators.
class Cone {
public:
    explicit Cone(std::size_t ambient_dim, const std::vector<IntVec>& generators = {}) : ambient_dim_(ambient_dim)
    {
        for (const auto& g : generators) {
            require_same_dim(g.size(), ambient_dim, "cone generator");
            PrimitiveVec p(g);
            if (std::find(generators_.begin(), generators_.end(), p) == generators_.end()) generators_.push_back(p);
        }
    }

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    const std::vector<PrimitiveVec>& generators() const noexcept { return generators_; }

    std::vector<IntVec> generator_coords() const
    {
        std::vector<IntVec> out;
        for (const auto& g : generators_) out.push_back(g.coords());
        return out;
    }

    /// Dimension of the linear span.
    std::size_t dimension() const
    {
        RatMatrix m;
        for (const auto& g : generators_) m.push_back(g.to_rational());
        return rank(m);
    }

    /// Equations of the span and inward facet normals, by double description.
    HDescription h_description() const
    {
        if (ambient_dim_ > kMaxFacetAmbientDim || generators_.size() > kMaxFacetGenerators)
            throw TropicError(ErrorCode::TooLargeForFacets,
                              "facet enumeration limited to ambient_dim <= 6 and <= 32 generators");
        return facet_description(generator_coords(), ambient_dim_);
    }

    friend bool operator==(const Cone&, const Cone&) = default;

private:
    std::size_t ambient_dim_;
    std::vector<PrimitiveVec> generators_;
};

enum class Containment { closure, relative_interior };

/**
 * Membership of p in the cone. Closure membership is decided by exact LP
 * feasibility; relative-interior membership by the facet description (p
 * satisfies the span equations and every facet inequality strictly).
 */
inline bool cone_contains(const Cone& c, const RatVec& p, Containment mode)
{
    require_same_dim(p.size(), c.ambient_dim(), "cone_contains");
    if (mode == Containment::closure) return nonnegative_combination(c.generator_coords(), p).has_value();
    return c.h_description().contains_relative_interior(p);
}

/// Linear span basis of a cone's generators as an RREF-derived integer basis.
inline std::vector<IntVec> span_basis(const Cone& c)
{
    RatMatrix m;
    for (const auto& g : c.generators()) m.push_back(g.to_rational());
    return row_space_basis(m, c.ambient_dim());
}

}  // namespace tropic
