// SPDX-License-Identifier: Apache-2.0
#include "nfal/geometry.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace nfal;

namespace {

double max_gap(const ArrayGeometry& a, double Vec2::*c)
{
    std::vector<double> v;
    for (const auto& e : a.elements) v.push_back(e.*c);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(), [](double p, double q) { return std::abs(p - q) < 1e-9; }), v.end());
    double g = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) g = std::max(g, v[i] - v[i - 1]);
    return g;
}

} // namespace

TEST(BuildLinear, DenseRowSpacingIsEndpointInclusive)
{
    const auto a = build_linear(1200, 600.0);
    ASSERT_EQ(a.size(), 1200u);
    EXPECT_NEAR(*a.spacing(Axis::x), 600.0 / 1199.0, 1e-12);
    EXPECT_NEAR(a.elements.front().x, -300.0, 1e-9);
    EXPECT_NEAR(a.elements.back().x, 300.0, 1e-9);
}

TEST(BuildLinear, TwoElementsSitAtTheEndpoints)
{
    const auto a = build_linear(2, 1.0);
    ASSERT_EQ(a.size(), 2u);
    EXPECT_DOUBLE_EQ(a.elements[0].x, -0.5);
    EXPECT_DOUBLE_EQ(a.elements[1].x, 0.5);
    EXPECT_DOUBLE_EQ(*a.spacing(Axis::x), 1.0);
}

TEST(BuildLinear, Fig7cRow)
{
    const auto a = build_linear(84, 400.0);
    EXPECT_NEAR(*a.spacing(Axis::x), 400.0 / 83.0, 1e-12);
    EXPECT_NEAR(*a.spacing(Axis::x), 4.819, 1e-3);
}

TEST(BuildLinear, AxisAndCenterAreHonoured)
{
    const auto a = build_linear(11, 10.0, {3.0, -2.0}, {0.0, 1.0});
    for (const auto& e : a.elements) EXPECT_NEAR(e.x, 3.0, 1e-12);
    EXPECT_NEAR(a.elements.front().y, -7.0, 1e-12);
    EXPECT_NEAR(a.elements.back().y, 3.0, 1e-12);
    EXPECT_NEAR(*a.spacing(Axis::y), 1.0, 1e-12);
}

TEST(BuildRectangular, Fig4aLattice)
{
    const auto a = build_rectangular(64, 64, 15.0, 15.0);
    EXPECT_EQ(a.size(), 4096u);
    EXPECT_NEAR(*a.spacing(Axis::x), 15.0 / 63.0, 1e-12);
    EXPECT_NEAR(*a.spacing(Axis::y), 0.238, 1e-3);
}

TEST(BuildRectangular, Fig7fLattice)
{
    const auto a = build_rectangular(84, 84, 400.0, 400.0, {0.0, -200.0});
    EXPECT_EQ(a.size(), 84u * 84u);
    EXPECT_NEAR(*a.spacing(Axis::x), 400.0 / 83.0, 1e-12);
    EXPECT_NEAR(a.centroid().y, -200.0, 1e-9);
}

TEST(BuildRectangular, SingleRowEqualsLinear)
{
    const auto r = build_rectangular(17, 1, 8.0, 0.0);
    const auto l = build_linear(17, 8.0);
    ASSERT_EQ(r.size(), l.size());
    for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r.elements[i], l.elements[i]);
}

TEST(BuildRectangular, SingleColumnEqualsLinearAlongY)
{
    const auto r = build_rectangular(1, 9, 0.0, 4.0);
    const auto l = build_linear(9, 4.0, {}, {0.0, 1.0});
    ASSERT_EQ(r.size(), l.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        EXPECT_NEAR(r.elements[i].x, l.elements[i].x, 1e-12);
        EXPECT_NEAR(r.elements[i].y, l.elements[i].y, 1e-12);
    }
}

TEST(BuildCircular, FullCircleAvoidsDuplicateElement)
{
    const auto a = build_circular(384, kTwoPi, 100.0);
    ASSERT_EQ(a.size(), 384u);
    EXPECT_NEAR(*a.spacing(Axis::theta), kTwoPi / 384.0, 1e-12);
    EXPECT_GT(distance(a.elements.front(), a.elements.back()), 1.0);
    EXPECT_EQ(a.coord_system, CoordSystem::polar);
}

TEST(BuildCircular, PartialArcIncludesEndpoints)
{
    const double arc = kPi / 3.0;
    const auto a = build_circular(32, arc, 100.0, {}, 0.25);
    EXPECT_NEAR(*a.spacing(Axis::theta), arc / 31.0, 1e-12);
    EXPECT_NEAR(a.polar.front().theta, 0.25, 1e-12);
    EXPECT_NEAR(a.polar.back().theta, 0.25 + arc, 1e-12);
    for (const auto& p : a.polar) EXPECT_NEAR(p.r, 100.0, 1e-9);
}

TEST(BuildCircular, SingleElementAtStartAngle)
{
    const auto a = build_circular(1, kPi, 5.0, {1.0, 1.0}, kPi / 2);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_NEAR(a.elements[0].x, 1.0, 1e-12);
    EXPECT_NEAR(a.elements[0].y, 6.0, 1e-12);
}

TEST(BuildConcentric, Fig8iRings)
{
    std::vector<double> radii;
    for (int i = 0; i < 10; ++i) radii.push_back(50.0 + 50.0 * i / 9.0);
    const auto a = build_concentric(32, kPi / 3, radii);
    EXPECT_EQ(a.size(), 320u);
    EXPECT_NEAR(*a.spacing(Axis::r), 50.0 / 9.0, 1e-9);
    EXPECT_EQ(a.rings, 10u);
    EXPECT_EQ(a.per_ring, 32u);
}

TEST(BuildConcentric, Fig8jRings)
{
    const auto a = build_concentric(720, kTwoPi, {700.0, 775.0, 850.0, 925.0, 1000.0});
    EXPECT_EQ(a.size(), 3600u);
    EXPECT_NEAR(*a.spacing(Axis::r), 75.0, 1e-9);
}

TEST(BuildConcentric, SingleRadiusEqualsCircular)
{
    const auto c = build_concentric(40, kPi, {30.0}, {2.0, 0.0}, 0.5);
    const auto r = build_circular(40, kPi, 30.0, {2.0, 0.0}, 0.5);
    ASSERT_EQ(c.size(), r.size());
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c.elements[i], r.elements[i]);
}

TEST(Polar, Examples)
{
    const auto a = to_polar({0.0, 10.0});
    EXPECT_NEAR(a.r, 10.0, 1e-12);
    EXPECT_NEAR(a.theta, kPi / 2, 1e-12);
    const auto b = to_polar({-20.0, -20.0});
    EXPECT_NEAR(b.r, 20.0 * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(b.theta, -3.0 * kPi / 4, 1e-12);
}

TEST(Polar, RoundTrip)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const Vec2 p{u(rng), u(rng)};
        const Vec2 q = from_polar(to_polar(p));
        EXPECT_NEAR(q.x, p.x, 1e-12 * 100);
        EXPECT_NEAR(q.y, p.y, 1e-12 * 100);
    }
}

TEST(GeometryProperties, BuildersAreDeterministic)
{
    EXPECT_EQ(build_linear(301, 123.4, {1, 2}, {0.6, 0.8}).elements, build_linear(301, 123.4, {1, 2}, {0.6, 0.8}).elements);
    EXPECT_EQ(build_rectangular(13, 7, 5.0, 3.0).elements, build_rectangular(13, 7, 5.0, 3.0).elements);
    EXPECT_EQ(build_concentric(30, 2.0, {4.0, 5.0}).elements, build_concentric(30, 2.0, {4.0, 5.0}).elements);
}

TEST(GeometryProperties, RecordedSpacingEqualsLargestGap)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> n(2, 60);
    std::uniform_real_distribution<double> d(1.0, 200.0);
    for (int t = 0; t < 50; ++t) {
        const auto l = build_linear(n(rng), d(rng));
        EXPECT_NEAR(*l.spacing(Axis::x), max_gap(l, &Vec2::x), 1e-9);
        const auto r = build_rectangular(n(rng), n(rng), d(rng), d(rng));
        EXPECT_NEAR(*r.spacing(Axis::x), max_gap(r, &Vec2::x), 1e-9);
        EXPECT_NEAR(*r.spacing(Axis::y), max_gap(r, &Vec2::y), 1e-9);
    }
}

TEST(GeometryProperties, UniformBuildersHaveDistinctElements)
{
    EXPECT_NO_THROW(check_distinct(build_rectangular(20, 20, 5.0, 5.0).elements));
    EXPECT_NO_THROW(check_distinct(build_circular(500, kTwoPi, 10.0).elements));
    EXPECT_THROW(check_distinct({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1e-10}}), InvalidArgument);
    EXPECT_THROW(from_points({{1.0, 1.0}, {1.0, 1.0}}), InvalidArgument);
}

TEST(GeometryErrors, InvalidParameters)
{
    EXPECT_THROW(build_linear(0, 1.0), InvalidArgument);
    EXPECT_THROW(build_linear(4, -1.0), InvalidArgument);
    EXPECT_THROW(build_circular(8, kPi, 0.0), InvalidArgument);
}

TEST(Subsets, SelectKeepsLatticeAndIsSubset)
{
    const auto a = build_linear(20, 19.0);
    const auto s = select(a, {3, 4, 5, 9});
    EXPECT_EQ(s.size(), 4u);
    EXPECT_DOUBLE_EQ(*s.spacing(Axis::x), 1.0);
    EXPECT_TRUE(is_subset(s, a));
    EXPECT_FALSE(is_subset(a, s));
    EXPECT_THROW(select(a, {25}), InvalidArgument);
}

TEST(Subsets, MergeOfCompatibleLattices)
{
    const auto a = build_linear(5, 4.0, {-10.0, 0.0});
    const auto b = build_linear(5, 4.0, {10.0, 0.0});
    const auto m = merge(a, b);
    EXPECT_EQ(m.size(), 10u);
    EXPECT_TRUE(is_subset(a, m));
    EXPECT_TRUE(is_subset(b, m));
}

TEST(SceneValidation, Errors)
{
    const auto a = build_linear(3, 2.0);
    Scene s{1.0, {0.0, 5.0}, {{-1, 1, -1, 1}, 4, 4}};
    EXPECT_NO_THROW(s.validate(a));
    Scene bad = s;
    bad.wavelength = 0.0;
    EXPECT_THROW(bad.validate(a), InvalidArgument);
    bad = s;
    bad.grid.region = {1, 1, 0, 1};
    EXPECT_THROW(bad.validate(a), InvalidArgument);
    bad = s;
    bad.source = {1.0, 0.0};
    EXPECT_ANY_THROW(bad.validate(a));
}
