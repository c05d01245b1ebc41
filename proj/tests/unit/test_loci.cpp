// SPDX-License-Identifier: Apache-2.0
#include "nfal/analysis.hpp"
#include "nfal/loci.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nfal;

namespace {

constexpr double k = kWavenumber;

} // namespace

TEST(Hyperbola, CoefficientIdentities)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int t = 0; t < 500; ++t) {
        const Vec2 xs{u(rng), 30.0 + u(rng)}, xt{u(rng), 30.0 + u(rng)};
        if (std::abs(xs.y - xt.y) < 1e-3) continue;
        const auto c = hyperbola_coefficients(xt, xs);
        EXPECT_NEAR(c.c, -0.5, 1e-9 * (1.0 + c.u1 * c.u1));
        EXPECT_NEAR(c.discriminant(), 4.0 * c.u1 * c.u1 + 2.0, 1e-9 * (1.0 + c.u1 * c.u1));
        EXPECT_GT(c.discriminant(), 0.0);
        EXPECT_DOUBLE_EQ(c.eps, xs.y - xt.y);
        EXPECT_DOUBLE_EQ(c.u0, xs.x);
        EXPECT_DOUBLE_EQ(c.u1, -0.75 * (xt.x - xs.x) / c.eps);
    }
}

TEST(Hyperbola, EqualDepthIsDegenerate)
{
    EXPECT_THROW(hyperbola_coefficients({3, 10}, {0, 10}), DegenerateExpansionError);
}

TEST(Asymptotes, SlopesSolveTheQuadratic)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int t = 0; t < 500; ++t) {
        const Vec2 xs{u(rng), 30.0 + u(rng)}, xt{u(rng), 30.0 + u(rng)};
        if (std::abs(xs.y - xt.y) < 1e-3) continue;
        const auto c = hyperbola_coefficients(xt, xs);
        const auto [l1, l2] = asymptotes(c);
        for (const auto& l : {l1, l2}) {
            ASSERT_FALSE(l.vertical);
            const double scale = c.a + std::abs(c.b * l.m) + std::abs(c.c * l.m * l.m);
            EXPECT_LT(std::abs(c.a + c.b * l.m + c.c * l.m * l.m) / scale, 1e-12);
        }
        EXPECT_NE(l1.m, l2.m);
    }
}

TEST(Asymptotes, ConicIsAsymptoticallyLinearAlongEachLine)
{
    // on A = m x + p the quadratic and linear terms in x cancel, so F stays bounded
    const Vec2 xs{2.0, 20.0}, xt{3.5, 19.0};
    const auto c = hyperbola_coefficients(xt, xs);
    const auto [l1, l2] = asymptotes(c);
    for (const auto& l : {l1, l2}) {
        const double f3 = c.evaluate(1e3, l.m * 1e3 + l.p), f6 = c.evaluate(1e6, l.m * 1e6 + l.p);
        EXPECT_NEAR(f3, f6, 1e-6 * 1e6 * 1e6 * (1.0 + std::abs(c.b)));
        EXPECT_LT(c.relative_residual(1e6, l.m * 1e6 + l.p), 1e-9);
    }
}

TEST(Asymptotes, VerticalOffsetGivesSymmetricSlopes)
{
    // x̃_s = x_s + (0, ε): u1 = 0, so c m² + a = 0 with c = -1/2
    const auto c = hyperbola_coefficients({1.0, 24.0}, {1.0, 25.0});
    EXPECT_EQ(c.u1, 0.0);
    const auto [l1, l2] = asymptotes(c);
    EXPECT_NEAR(std::max(l1.m, l2.m), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::min(l1.m, l2.m), -std::sqrt(2.0), 1e-12);
}

TEST(ExactLoci, ReturnedPointsAreRoots)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::size_t total = 0;
    for (int t = 0; t < 40; ++t) {
        const Vec2 xs{u(rng), 20.0 + u(rng)}, xt{u(rng), 20.0 + u(rng)};
        for (Axis ax : {Axis::x, Axis::y}) {
            const auto c = ax == Axis::x ? SamplingCurve::line({-200, 0.37}, {200, 0.37})
                                         : SamplingCurve::line({0.29, -200}, {0.29, -1});
            const auto r = exact_loci(xt, xs, k, ax, c);
            ASSERT_EQ(r.roots.size(), r.params.size());
            for (std::size_t i = 0; i < r.roots.size(); ++i) {
                ++total;
                EXPECT_LT(std::abs(phase_second_derivative(r.roots[i], xt, xs, k, ax)), 1e-8);
                const Vec2 back = c.at(r.params[i]);
                EXPECT_NEAR(back.x, r.roots[i].x, 1e-9);
                EXPECT_NEAR(back.y, r.roots[i].y, 1e-9);
            }
        }
    }
    EXPECT_GT(total, 20u);
}

TEST(ExactLoci, SelfMatchIsDegenerate)
{
    const auto r = exact_loci({1, 9}, {1, 9}, k, Axis::x, SamplingCurve::line({-10, 0}, {10, 0}));
    EXPECT_TRUE(r.degenerate);
    EXPECT_TRUE(r.roots.empty());
}

TEST(ExactLoci, NoSignChangeGivesNoRoots)
{
    const Vec2 xs{0, 10}, xt{0.5, 9.5};
    const auto c = SamplingCurve::line({40.0, -5.0}, {41.0, -5.0});
    // the oracle: one sign along the whole segment
    const double s0 = phase_second_derivative(c.at(0.0), xt, xs, k, Axis::x);
    for (int i = 1; i <= 1000; ++i)
        ASSERT_GT(s0 * phase_second_derivative(c.at(i / 1000.0), xt, xs, k, Axis::x), 0.0);
    const auto r = exact_loci(xt, xs, k, Axis::x, c, 64);
    EXPECT_FALSE(r.degenerate);
    EXPECT_TRUE(r.roots.empty());
}

TEST(ExactLoci, CentredSourcesOnAFullCircle)
{
    // large circle: roots at θ_ss + π/2 + nπ
    const Vec2 xs{-10, -10}, xt{10, 10};
    const double th_ss = std::atan2(xs.y - xt.y, xs.x - xt.x);
    const auto r = exact_loci(xt, xs, k, Axis::theta, SamplingCurve::arc({}, 1e4, 0.0123, 0.0123 + kTwoPi));
    ASSERT_EQ(r.roots.size(), 2u);
    std::vector<double> th;
    for (const auto& p : r.roots) th.push_back(std::atan2(p.y, p.x));
    EXPECT_NEAR(std::abs(std::remainder(th[0] - th[1], kTwoPi)), kPi, 2e-3);
    for (double t : th) EXPECT_NEAR(std::abs(std::remainder(t - th_ss, kPi)), kPi / 2, 1e-3);
}

TEST(ExactLoci, InteriorCriticalAntennaSitsNextToARoot)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto row = build_linear(121, 60.0);
    const double spacing = *row.spacing(Axis::x);
    std::size_t checked = 0;
    for (int t = 0; t < 400 && checked < 20; ++t) {
        const Vec2 xs{15.0 * u(rng), 20.0 + 5.0 * u(rng)};
        const Vec2 xt = xs + Vec2{3.0 * u(rng), 3.0 * u(rng)};
        const auto m = max_matched_frequency(row, xt, xs, k, Axis::x);
        const std::size_t i = m.cae.front();
        if (i == 0 || i + 1 == row.size()) continue;
        const auto r = exact_loci(xt, xs, k, Axis::x, SamplingCurve::line({-30.0, 0.0}, {30.0, 0.0}), 8192);
        ASSERT_FALSE(r.roots.empty()) << "trial " << t;
        double best = 1e300;
        for (const auto& p : r.roots) best = std::min(best, std::abs(p.x - row.elements[i].x));
        EXPECT_LE(best, spacing) << "trial " << t;
        ++checked;
    }
    EXPECT_GE(checked, 10u);
}

TEST(FarField, KgDependsOnlyOnDirections)
{
    const Vec2 xs{3e4, 4e4}, xt{6e4, 8e4};
    // same direction, different range
    const auto same = ff_kg_approx({1, 2}, xt, xs, k);
    EXPECT_NEAR(same.approx.k1, 0.0, 1e-12);
    EXPECT_NEAR(same.approx.k2, 0.0, 1e-12);
    const auto a = ff_kg_approx({1, 2}, {-4e4, 3e4}, xs, k), b = ff_kg_approx({-3, 0.5}, {-4e4, 3e4}, xs, k);
    EXPECT_EQ(a.approx.k1, b.approx.k1);
    EXPECT_EQ(a.approx.k2, b.approx.k2);
}

TEST(FarField, KgErrorScalesWithRangeRatio)
{
    const Vec2 z{3.0, -4.0};
    const double r = 1e4 * norm(z);
    const Vec2 xs{r * 0.6, r * 0.8}, xt{-r * 0.8, r * 0.6};
    const auto f = ff_kg_approx(z, xt, xs, k);
    EXPECT_NEAR(f.rho, 1e-4, 1e-12);
    EXPECT_LT(f.error, 1e-3 * k);
    const double dx = f.approx.k1 - f.exact.k1, dy = f.approx.k2 - f.exact.k2;
    EXPECT_NEAR(f.error, std::hypot(dx, dy), 1e-15);
    EXPECT_NEAR(f.c, f.error / (k * f.rho), 1e-12);
    const auto ex = k_g(z, xt, xs, k);
    EXPECT_EQ(f.exact.k1, ex.k1);
    EXPECT_EQ(f.exact.k2, ex.k2);
}

TEST(FarField, CircularPhase)
{
    const Vec2 xs{-10, -10}, xt{10, 10};
    // self-match: r_ss = 0
    EXPECT_EQ(ff_phi_circular({1e4, 0}, xs, xs, k).approx, 0.0);
    // max over θ_z of |∂φ/∂θ_z| = k r_ss
    const double rss = distance(xs, xt);
    double best = 0.0;
    const double h = 1e-6;
    for (int i = 0; i < 3600; ++i) {
        const double t = kTwoPi * i / 3600.0;
        auto phi = [&](double s) { return ff_phi_circular({std::cos(s), std::sin(s)}, xt, xs, k).approx; };
        best = std::max(best, std::abs((phi(t + h) - phi(t - h)) / (2 * h)));
    }
    EXPECT_NEAR(best, k * rss, 1e-4 * k * rss);
    // approximation quality improves with radius
    const auto near = ff_phi_circular({500, 300}, xt, xs, k), far = ff_phi_circular({5e4, 3e4}, xt, xs, k);
    EXPECT_LT(far.error, near.error);
    EXPECT_LT(far.rho, near.rho);
    EXPECT_NEAR(ff_phi_circular_dtheta2(0.3, xt, xs, k), -k * rss * std::cos(0.3 - std::atan2(-20.0, -20.0)), 1e-9);
}
