#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropic/cone.hpp"

namespace tropic {

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
    std::vector<std::string> warnings;

    void fail(std::string why)
    {
        valid = false;
        violations.push_back(std::move(why));
    }
};

using RayIndices = std::vector<std::size_t>;

inline std::string describe(const RayIndices& idx)
{
    std::string s = "[";
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s + "]";
}

/**
 * A fan given by primitive rays and cones listed as ray-index sets.
 *
 * Cones are kept in a canonical order (lexicographic on their sorted
 * generator lists) so every report that walks the fan is deterministic.
 * The facet description of each cone is computed once, at construction.
 * Completeness is never checked; `trusted_complete` only records that the
 * caller vouches for it.
 */
class Fan {
public:
    Fan(std::size_t ambient_dim, const std::vector<IntVec>& rays, const std::vector<RayIndices>& cones,
        bool trusted_complete = false)
        : ambient_dim_(ambient_dim), trusted_complete_(trusted_complete)
    {
        if (ambient_dim == 0) throw TropicError(ErrorCode::InvalidFan, "ambient_dim must be positive");
        for (const auto& r : rays) {
            require_same_dim(r.size(), ambient_dim, "fan ray");
            PrimitiveVec p(r);
            if (std::find(rays_.begin(), rays_.end(), p) != rays_.end())
                throw TropicError(ErrorCode::InvalidFan, "duplicate ray");
            rays_.push_back(p);
        }
        for (auto c : cones) {
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            for (auto i : c)
                if (i >= rays_.size()) throw TropicError(ErrorCode::InvalidFan, "ray index out of range");
            if (std::find(cones_.begin(), cones_.end(), c) == cones_.end()) cones_.push_back(c);
        }
        auto key = [this](const RayIndices& c) {
            std::vector<IntVec> g;
            for (auto i : c) g.push_back(rays_[i].coords());
            std::sort(g.begin(), g.end());
            return g;
        };
        std::sort(cones_.begin(), cones_.end(), [&](const RayIndices& a, const RayIndices& b) { return key(a) < key(b); });
        for (const auto& c : cones_) hdesc_.push_back(cone(c).h_description());
    }

    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    bool trusted_complete() const noexcept { return trusted_complete_; }
    const std::vector<PrimitiveVec>& rays() const noexcept { return rays_; }
    const std::vector<RayIndices>& cones() const noexcept { return cones_; }
    std::size_t cone_count() const noexcept { return cones_.size(); }
    const HDescription& h_description(std::size_t i) const { return hdesc_.at(i); }

    Cone cone(const RayIndices& idx) const
    {
        std::vector<IntVec> g;
        for (auto i : idx) g.push_back(rays_.at(i).coords());
        return Cone(ambient_dim_, g);
    }

    Cone cone(std::size_t i) const { return cone(cones_.at(i)); }

    std::optional<std::size_t> find_cone(RayIndices idx) const
    {
        std::sort(idx.begin(), idx.end());
        auto it = std::find(cones_.begin(), cones_.end(), idx);
        if (it == cones_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - cones_.begin());
    }

    /// Index of the ray equal to d, if any.
    std::optional<std::size_t> find_ray(const PrimitiveVec& d) const
    {
        auto it = std::find(rays_.begin(), rays_.end(), d);
        if (it == rays_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - rays_.begin());
    }

    friend bool operator==(const Fan& a, const Fan& b)
    {
        return a.ambient_dim_ == b.ambient_dim_ && a.trusted_complete_ == b.trusted_complete_ && a.rays_ == b.rays_ &&
               a.cones_ == b.cones_;
    }

private:
    std::size_t ambient_dim_;
    bool trusted_complete_;
    std::vector<PrimitiveVec> rays_;
    std::vector<RayIndices> cones_;
    std::vector<HDescription> hdesc_;
};

/// All faces of the cone spanned by the given fan rays, as index sets.
inline std::set<RayIndices> faces_of(const Fan& fan, const RayIndices& idx)
{
    std::set<RayIndices> seen;
    std::deque<RayIndices> todo{idx};
    while (!todo.empty()) {
        RayIndices f = std::move(todo.front());
        todo.pop_front();
        if (!seen.insert(f).second) continue;
        HDescription h = fan.cone(f).h_description();
        for (const auto& normal : h.facets) {
            RayIndices tight;
            for (auto i : f)
                if (dot(normal, fan.rays()[i].coords()) == 0) tight.push_back(i);
            todo.push_back(std::move(tight));
        }
    }
    return seen;
}

namespace detail {

inline bool is_pointed(const HDescription& h, std::size_t dim)
{
    RatMatrix m;
    for (const auto& e : h.equations) m.push_back(to_rational(e));
    for (const auto& f : h.facets) m.push_back(to_rational(f));
    return rank(m) == dim;
}

/// Is sigma ∩ tau a face of sigma? Computes the intersection by double
/// description, then the smallest face of sigma holding a relative-interior
/// point of it, and checks that face sits inside tau.
inline bool intersection_is_face(const Fan& fan, std::size_t sigma, std::size_t tau)
{
    const auto& hs = fan.h_description(sigma);
    const auto& ht = fan.h_description(tau);
    std::vector<IntVec> eq = hs.equations, ineq = hs.facets;
    eq.insert(eq.end(), ht.equations.begin(), ht.equations.end());
    ineq.insert(ineq.end(), ht.facets.begin(), ht.facets.end());
    VDescription meet = double_description(eq, ineq, fan.ambient_dim());
    RatVec p(fan.ambient_dim(), Rational(0));
    for (const auto& r : meet.rays) p = add(p, to_rational(r));

    std::vector<IntVec> tight;
    for (const auto& f : hs.facets)
        if (dot(f, p) == 0) tight.push_back(f);
    for (auto i : fan.cones()[sigma]) {
        const auto& g = fan.rays()[i].coords();
        bool in_face = std::all_of(tight.begin(), tight.end(), [&](const IntVec& f) { return dot(f, g) == 0; });
        if (in_face && !ht.contains(to_rational(g))) return false;
    }
    return true;
}

}  // namespace detail

inline constexpr std::size_t kTrustedValidationBound = 64;

/**
 * Checks that every cone is pointed, that the fan is closed under faces and
 * that pairwise intersections are common faces. Stops at the first
 * violation. A trusted fan with more than `trusted_bound` cones is not
 * checked at all.
 */
inline ValidationReport fan_validate(const Fan& fan, std::size_t trusted_bound = kTrustedValidationBound)
{
    ValidationReport report;
    if (fan.trusted_complete() && fan.cone_count() > trusted_bound) {
        report.warnings.push_back("validation skipped: trusted fan with " + std::to_string(fan.cone_count()) +
                                  " cones exceeds bound " + std::to_string(trusted_bound));
        return report;
    }
    const auto& cones = fan.cones();
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (!detail::is_pointed(fan.h_description(i), fan.ambient_dim())) {
            report.fail("cone " + describe(cones[i]) + " is not pointed");
            return report;
        }
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        for (const auto& face : faces_of(fan, cones[i])) {
            if (!fan.find_cone(face)) {
                report.fail("face closure violated: cone " + describe(cones[i]) + " is missing face " + describe(face));
                return report;
            }
        }
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            if (!detail::intersection_is_face(fan, i, j) || !detail::intersection_is_face(fan, j, i)) {
                report.fail("non-face intersection of cones " + describe(cones[i]) + " and " + describe(cones[j]));
                return report;
            }
        }
    }
    return report;
}

/// Index of the unique cone whose relative interior contains p.
inline std::size_t smallest_containing_cone(const Fan& fan, const RatVec& p)
{
    require_same_dim(p.size(), fan.ambient_dim(), "smallest_containing_cone");
    for (std::size_t i = 0; i < fan.cone_count(); ++i)
        if (fan.h_description(i).contains_relative_interior(p)) return i;
    std::string where;
    for (const auto& x : p) where += (where.empty() ? "" : ",") + to_string(x);
    throw TropicError(ErrorCode::NotInSupport, "point (" + where + ") is outside the fan support");
}

/// Some cone containing every given point (closure), if one exists.
inline std::optional<std::size_t> common_cone(const Fan& fan, const std::vector<RatVec>& points)
{
    for (std::size_t i = 0; i < fan.cone_count(); ++i) {
        const auto& h = fan.h_description(i);
        if (std::all_of(points.begin(), points.end(), [&](const RatVec& p) { return h.contains(p); })) return i;
    }
    return std::nullopt;
}

}  // namespace tropic
