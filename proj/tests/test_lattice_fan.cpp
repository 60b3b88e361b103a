#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tropic/fan.hpp"

using namespace tropic;
using namespace tropic::testing;

namespace {

Fan p2_fan()
{
    return Fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{}, {0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST(Primitive, DividesByContent)
{
    EXPECT_EQ(primitive(iv({2, 4})).coords(), iv({1, 2}));
    EXPECT_EQ(primitive(iv({1, 0, 0})).coords(), iv({1, 0, 0}));
    // gcd(3, 6, 9) = 3 by hand.
    EXPECT_EQ(primitive(iv({-3, 6, -9})).coords(), iv({-1, 2, -3}));
}

TEST(Primitive, ZeroVectorIsAnError)
{
    try {
        primitive(iv({0, 0}));
        FAIL();
    } catch (const TropicError& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroDirection);
    }
}

TEST(Primitive, IdempotentAndRecoversMultiple)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-30, 30);
    for (int trial = 0; trial < 200; ++trial) {
        IntVec v = iv({d(rng), d(rng), d(rng)});
        if (is_zero(v)) continue;
        PrimitiveVec p = primitive(v);
        EXPECT_EQ(primitive(p.coords()), p);
        Integer g = content(v);
        EXPECT_GT(g, 0);
        for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], g * p[i]);
    }
}

TEST(ConeContains, Examples)
{
    Cone quadrant(2, {iv({1, 0}), iv({0, 1})});
    EXPECT_TRUE(cone_contains(quadrant, rv({1, 1}), Containment::relative_interior));
    EXPECT_FALSE(cone_contains(quadrant, rv({1, 0}), Containment::relative_interior));
    EXPECT_TRUE(cone_contains(quadrant, rv({1, 0}), Containment::closure));

    Cone wedge(2, {iv({1, 0}), iv({1, 2})});
    EXPECT_TRUE(cone_contains(wedge, rv({2, 1}), Containment::closure));
    // The 2x2 solve gives lambda = (3/2, 1/2); the LP must find exactly that.
    auto lambda = nonnegative_combination(wedge.generator_coords(), rv({2, 1}));
    ASSERT_TRUE(lambda);
    EXPECT_EQ((*lambda)[0], Rational(3, 2));
    EXPECT_EQ((*lambda)[1], Rational(1, 2));
    EXPECT_FALSE(cone_contains(wedge, rv({0, 1}), Containment::closure));
}

TEST(ConeContains, DimensionMismatch)
{
    Cone quadrant(2, {iv({1, 0}), iv({0, 1})});
    try {
        cone_contains(quadrant, rv({1, 1, 1}), Containment::closure);
        FAIL();
    } catch (const TropicError& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimMismatch);
    }
}

TEST(ConeContains, GeneratorsAreInClosure)
{
    Cone c(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 1}), iv({2, -1, 3})});
    for (const auto& g : c.generators()) EXPECT_TRUE(cone_contains(c, g.to_rational(), Containment::closure));
}

TEST(ConeContains, LinearProgramAgreesWithFacets)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<IntVec> gens;
        for (int k = 0; k < 4; ++k) {
            IntVec g = iv({d(rng), d(rng), d(rng)});
            if (!is_zero(g)) gens.push_back(g);
        }
        Cone c(3, gens);
        HDescription h = c.h_description();
        for (int s = 0; s < 20; ++s) {
            RatVec p = rv({d(rng), d(rng), d(rng)});
            EXPECT_EQ(cone_contains(c, p, Containment::closure), h.contains(p));
            if (cone_contains(c, p, Containment::relative_interior))
                EXPECT_TRUE(cone_contains(c, p, Containment::closure));
        }
    }
}

TEST(DoubleDescription, HalfPlaneHasLineality)
{
    // { y1 + y2 >= 0 } in R^2.
    VDescription v = double_description({}, {iv({1, 1})}, 2);
    ASSERT_EQ(v.lineality.size(), 1u);
    EXPECT_EQ(dot(v.lineality[0], iv({1, 1})), 0);
    ASSERT_EQ(v.rays.size(), 1u);
    EXPECT_EQ(v.rays[0], iv({1, 1}));
}

TEST(DoubleDescription, FacetsOfSquarePyramid)
{
    // Cone over a square: four facets, no equations.
    Cone c(3, {iv({1, 1, 1}), iv({1, -1, 1}), iv({-1, 1, 1}), iv({-1, -1, 1})});
    HDescription h = c.h_description();
    EXPECT_TRUE(h.equations.empty());
    std::vector<IntVec> expected{iv({-1, 0, 1}), iv({0, -1, 1}), iv({0, 1, 1}), iv({1, 0, 1})};
    EXPECT_EQ(h.facets, expected);
}

TEST(DoubleDescription, LowerDimensionalCone)
{
    Cone c(3, {iv({1, 0, 0}), iv({0, 1, 0})});
    HDescription h = c.h_description();
    ASSERT_EQ(h.equations.size(), 1u);
    EXPECT_EQ(h.equations[0], iv({0, 0, 1}));
    std::vector<IntVec> expected{iv({0, 1, 0}), iv({1, 0, 0})};
    EXPECT_EQ(h.facets, expected);
}

TEST(FanValidate, ProjectivePlaneIsValid)
{
    ValidationReport r = fan_validate(p2_fan());
    EXPECT_TRUE(r.valid) << (r.violations.empty() ? "" : r.violations.front());
}

TEST(FanValidate, OverlappingConesAreRejected)
{
    // cone{(1,0),(1,2)} ∩ cone{(1,1),(0,1)} = cone{(1,1),(1,2)}, a face of neither.
    Fan f(2, {iv({1, 0}), iv({1, 2}), iv({1, 1}), iv({0, 1})}, {{}, {0}, {1}, {2}, {3}, {0, 1}, {2, 3}});
    ValidationReport r = fan_validate(f);
    EXPECT_FALSE(r.valid);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_NE(r.violations[0].find("non-face intersection"), std::string::npos);
}

TEST(FanValidate, QuadrantAndHalfQuadrantOverlap)
{
    Fan f(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})}, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}});
    EXPECT_FALSE(fan_validate(f).valid);
}

TEST(FanValidate, MissingOriginBreaksFaceClosure)
{
    Fan f(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}});
    ValidationReport r = fan_validate(f);
    EXPECT_FALSE(r.valid);
    EXPECT_NE(r.violations[0].find("face closure violated"), std::string::npos);
}

TEST(FanValidate, NonPointedConeRejected)
{
    Fan f(1, {iv({1}), iv({-1})}, {{}, {0}, {1}, {0, 1}});
    EXPECT_FALSE(fan_validate(f).valid);
}

TEST(FanValidate, TrustedLargeFanIsSkippedWithWarning)
{
    Fan f(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0}, {1}}, true);
    ValidationReport r = fan_validate(f, 1);
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(SmallestContainingCone, ProjectivePlane)
{
    Fan f = p2_fan();
    EXPECT_EQ(f.cone(smallest_containing_cone(f, rv({5, 7}))), Cone(2, {iv({1, 0}), iv({0, 1})}));
    EXPECT_EQ(f.cone(smallest_containing_cone(f, rv({0, 0}))), Cone(2));
    EXPECT_EQ(f.cone(smallest_containing_cone(f, rv({-2, -2}))), Cone(2, {iv({-1, -1})}));
}

TEST(SmallestContainingCone, OutsideSupport)
{
    Fan f(2, {iv({1, 0}), iv({0, 1})}, {{}, {0}, {1}, {0, 1}});
    try {
        smallest_containing_cone(f, rv({-1, 0}));
        FAIL();
    } catch (const TropicError& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotInSupport);
    }
}

TEST(SmallestContainingCone, RelativeInteriorsAreDisjoint)
{
    Fan f = p2_fan();
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int s = 0; s < 200; ++s) {
        RatVec p{Rational(d(rng), 1 + (s % 3)), Rational(d(rng), 1 + (s % 5))};
        int hits = 0;
        for (std::size_t i = 0; i < f.cone_count(); ++i)
            if (cone_contains(f.cone(i), p, Containment::relative_interior)) ++hits;
        EXPECT_EQ(hits, 1);
    }
}

TEST(FanOrder, ConesAreCanonicallySorted)
{
    Fan a(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 2}, {1, 2}, {0, 1}, {2}, {1}, {0}, {}});
    EXPECT_EQ(a, p2_fan());
}

TEST(KernelDimension, Examples)
{
    EXPECT_EQ(kernel_dimension({rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}), 0u);
    EXPECT_EQ(kernel_dimension({rv({0, 0, 0, 0, 0}), rv({0, 0, 0, 0, 0})}), 5u);
    EXPECT_EQ(kernel_dimension({rv({1, 1, 0}), rv({2, 2, 0})}), 2u);
}

TEST(KernelDimension, TwoEliminationOrdersAgree)
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> size(1, 6), entry(-4, 4), zero(0, 2);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = size(rng), cols = size(rng);
        RatMatrix m(rows, RatVec(cols));
        for (auto& row : m)
            for (auto& x : row) x = zero(rng) == 0 ? Rational(0) : Rational(entry(rng), 1 + std::abs(entry(rng)));
        // force some dependent rows now and then
        if (rows > 2 && trial % 3 == 0) m[rows - 1] = add(m[0], scale(m[1], Rational(-2, 3)));
        EXPECT_EQ(rank_fraction_free(m), rank_column_pivot(m));
        EXPECT_EQ(kernel_dimension(m), cols - rank_column_pivot(m));
    }
}

TEST(IntegerKernel, IsSaturated)
{
    IntMatrix a{iv({2, 4, 6}), iv({1, 1, 1})};
    auto basis = integer_kernel(a, 3);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(content(basis[0]), 1);
    // Enumerate kernel vectors in a box; each must be an integer multiple of the basis vector.
    RatMatrix b{to_rational(basis[0])};
    RatMatrix bt = transpose(b, 3);
    for (int x = -4; x <= 4; ++x)
        for (int y = -4; y <= 4; ++y)
            for (int z = -4; z <= 4; ++z) {
                if (2 * x + 4 * y + 6 * z != 0 || x + y + z != 0) continue;
                auto c = solve(bt, rv({x, y, z}), 1);
                ASSERT_TRUE(c);
                EXPECT_TRUE(is_integral((*c)[0]));
            }
}

TEST(IntegerKernel, RankTwoLattice)
{
    IntMatrix a{iv({2, 4, 6, 0})};
    auto basis = integer_kernel(a, 4);
    ASSERT_EQ(basis.size(), 3u);
    for (const auto& v : basis) EXPECT_EQ(dot(a[0], v), 0);
    // (1,1,-1,0) is in the kernel and must be an integral combination.
    RatMatrix bt = transpose({to_rational(basis[0]), to_rational(basis[1]), to_rational(basis[2])}, 4);
    auto c = solve(bt, rv({1, 1, -1, 0}), 3);
    ASSERT_TRUE(c);
    for (const auto& x : *c) EXPECT_TRUE(is_integral(x));
}
