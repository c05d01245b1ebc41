// SPDX-License-Identifier: Apache-2.0
#include "nfal/contour.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace nfal;

namespace {

// unit cells over [0, nx] x [0, ny]: centres at half-integers
GridSpec unit_grid(std::size_t nx, std::size_t ny) { return {{0, static_cast<double>(nx), 0, static_cast<double>(ny)}, nx, ny}; }

std::vector<std::uint8_t> field(const GridSpec& g, const std::vector<std::pair<std::size_t, std::size_t>>& on)
{
    std::vector<std::uint8_t> b(g.size(), 0);
    for (auto [i, j] : on) b[g.index(i, j)] = 1;
    return b;
}

std::set<std::pair<double, double>> point_set(const Polyline& p)
{
    std::set<std::pair<double, double>> s;
    for (const auto& v : p.points) s.insert({v.x, v.y});
    return s;
}

} // namespace

TEST(MarchingSquares, UniformFieldsHaveNoContour)
{
    const auto g = unit_grid(6, 4);
    EXPECT_TRUE(marching_squares(g, std::vector<std::uint8_t>(g.size(), 0)).empty());
    EXPECT_TRUE(marching_squares(g, std::vector<std::uint8_t>(g.size(), 1)).empty());
}

TEST(MarchingSquares, SingleCellGivesADiamondThroughEdgeMidpoints)
{
    const auto g = unit_grid(5, 5);
    const auto lines = marching_squares(g, field(g, {{2, 2}}));
    ASSERT_EQ(lines.size(), 1u);
    const auto& p = lines[0];
    EXPECT_TRUE(p.closed);
    ASSERT_EQ(p.points.size(), 5u);
    EXPECT_EQ(p.points.front(), p.points.back());
    const std::set<std::pair<double, double>> expect = {{3.0, 2.5}, {2.5, 3.0}, {2.0, 2.5}, {2.5, 2.0}};
    EXPECT_EQ(point_set(p), expect);
}

TEST(MarchingSquares, HalfPlaneGivesOneOpenLine)
{
    const auto g = unit_grid(6, 5);
    std::vector<std::pair<std::size_t, std::size_t>> on;
    for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t i = 0; i < 3; ++i) on.push_back({i, j});
    const auto lines = marching_squares(g, field(g, on));
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_FALSE(lines[0].closed);
    ASSERT_EQ(lines[0].points.size(), 5u);
    for (const auto& v : lines[0].points) EXPECT_DOUBLE_EQ(v.x, 3.0);
    // from the first row centre to the last
    const double y0 = lines[0].points.front().y, y1 = lines[0].points.back().y;
    EXPECT_DOUBLE_EQ(std::min(y0, y1), 0.5);
    EXPECT_DOUBLE_EQ(std::max(y0, y1), 4.5);
}

TEST(MarchingSquares, AnnulusGivesTwoClosedLoops)
{
    const auto g = unit_grid(7, 7);
    std::vector<std::pair<std::size_t, std::size_t>> on;
    for (std::size_t j = 1; j < 6; ++j)
        for (std::size_t i = 1; i < 6; ++i)
            if (i != 3 || j != 3) on.push_back({i, j});
    const auto lines = marching_squares(g, field(g, on));
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_TRUE(lines[0].closed);
    EXPECT_TRUE(lines[1].closed);
    const std::size_t a = lines[0].points.size(), b = lines[1].points.size();
    EXPECT_EQ(std::min(a, b), 5u);      // the hole
    EXPECT_EQ(std::max(a, b), 4u * 5 + 1); // around the 5x5 block
}

TEST(MarchingSquares, SaddleKeepsTrueSamplesConnected)
{
    const auto g = unit_grid(4, 4);
    const auto lines = marching_squares(g, field(g, {{1, 1}, {2, 2}}));
    ASSERT_EQ(lines.size(), 1u);
    EXPECT_TRUE(lines[0].closed);
    EXPECT_EQ(lines[0].points.size(), 9u);
}

TEST(MarchingSquares, ShapeMismatchThrows)
{
    EXPECT_THROW(marching_squares(unit_grid(3, 3), std::vector<std::uint8_t>(8, 0)), InvalidArgument);
}

TEST(MarchingSquares, PointsStraddleTransitionsOnRandomFields)
{
    std::mt19937_64 rng(41);
    std::bernoulli_distribution bit(0.45);
    const auto g = unit_grid(24, 18);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint8_t> b(g.size());
        for (auto& v : b) v = bit(rng);
        const auto lines = marching_squares(g, b);
        std::size_t crossings = 0;
        for (std::size_t j = 0; j < g.ny; ++j)
            for (std::size_t i = 0; i < g.nx; ++i) {
                if (i + 1 < g.nx) crossings += b[g.index(i, j)] != b[g.index(i + 1, j)];
                if (j + 1 < g.ny) crossings += b[g.index(i, j)] != b[g.index(i, j + 1)];
            }
        std::set<std::pair<double, double>> seen;
        for (const auto& l : lines) {
            if (l.closed) EXPECT_EQ(l.points.front(), l.points.back());
            for (const auto& v : l.points) {
                // a midpoint between two adjacent centres of different value
                const double fx = v.x - std::floor(v.x), fy = v.y - std::floor(v.y);
                std::size_t i0, j0, i1, j1;
                if (fx == 0.0) {
                    ASSERT_EQ(fy, 0.5);
                    i0 = static_cast<std::size_t>(v.x) - 1, i1 = i0 + 1, j0 = j1 = static_cast<std::size_t>(v.y);
                } else {
                    ASSERT_EQ(fx, 0.5);
                    ASSERT_EQ(fy, 0.0);
                    j0 = static_cast<std::size_t>(v.y) - 1, j1 = j0 + 1, i0 = i1 = static_cast<std::size_t>(v.x);
                }
                EXPECT_NE(b[g.index(i0, j0)], b[g.index(i1, j1)]);
                seen.insert({v.x, v.y});
            }
        }
        // every transition edge is visited exactly once as a vertex
        EXPECT_EQ(seen.size(), crossings) << "field " << t;
    }
}
