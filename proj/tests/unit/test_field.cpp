// SPDX-License-Identifier: Apache-2.0
#include "nfal/analysis.hpp"
#include "nfal/field.hpp"
#include "nfal/loci.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nfal;

namespace {

constexpr double k = kWavenumber;

struct Rng {
    std::mt19937_64 g{2024};
    Vec2 point(double lo = -50.0, double hi = 50.0)
    {
        std::uniform_real_distribution<double> u(lo, hi);
        return {u(g), u(g)};
    }
};

// three points pairwise at least `gap` apart
void draw(Rng& r, Vec2& z, Vec2& a, Vec2& b, double gap = 1.0)
{
    do {
        z = r.point();
        a = r.point();
        b = r.point();
    } while (distance(z, a) < gap || distance(z, b) < gap || distance(a, b) < gap);
}

// central difference, step h
template <class F>
double central(F f, double h)
{
    return (f(h) - f(-h)) / (2.0 * h);
}

double rel(double a, double b, double scale) { return std::abs(a - b) / std::max(scale, 1e-300); }

} // namespace

TEST(Channel, UnitDistance)
{
    const cplx h = channel({0, 0}, {0, 1}, k);
    EXPECT_NEAR(std::abs(h), 1.0, 1e-12);
    EXPECT_NEAR(std::arg(h), 0.0, 1e-9);
}

TEST(Channel, HalfWavelength)
{
    const cplx h = channel({0, 0}, {0, 0.5}, k);
    EXPECT_NEAR(std::abs(h), 2.0, 1e-12);
    EXPECT_NEAR(std::abs(std::arg(h)), kPi, 1e-9);
}

TEST(Channel, AmplitudeIsInverseDistance)
{
    Rng r;
    for (int i = 0; i < 1000; ++i) {
        Vec2 z, x, unused;
        draw(r, z, x, unused);
        EXPECT_NEAR(std::abs(channel(z, x, k)) * distance(x, z), 1.0, 1e-12);
    }
}

TEST(MatchedProduct, SelfMatchIsRealPositive)
{
    const Vec2 z{1.0, -2.0}, xs{3.0, 7.0};
    const cplx g = matched_product(z, xs, xs, k);
    EXPECT_NEAR(g.imag(), 0.0, 1e-15);
    EXPECT_NEAR(g.real(), 1.0 / std::pow(distance(xs, z), 2), 1e-15);
}

TEST(MatchedProduct, PhaseAndSwap)
{
    Rng r;
    for (int i = 0; i < 500; ++i) {
        Vec2 z, xt, xs;
        draw(r, z, xt, xs);
        const cplx g = matched_product(z, xt, xs, k);
        const double expect = -k * (distance(xs, z) - distance(xt, z));
        EXPECT_NEAR(std::remainder(std::arg(g) - expect, kTwoPi), 0.0, 1e-9);
        const cplx s = matched_product(z, xs, xt, k);
        EXPECT_NEAR(std::abs(s - std::conj(g)), 0.0, 1e-15 * std::abs(g) + 1e-18);
        EXPECT_NEAR(std::abs(matched_phase(z, xt, xs, k)), 1.0, 1e-12);
    }
}

TEST(KH, Examples)
{
    const auto a = k_h({0, 0}, {0, 10}, k);
    EXPECT_NEAR(a.k1, 0.0, 1e-12);
    EXPECT_NEAR(a.k2, kTwoPi, 1e-12);
    const auto b = k_h({3, 0}, {0, 4}, k);
    EXPECT_NEAR(b.k1, kTwoPi * -0.6, 1e-12);
    EXPECT_NEAR(b.k2, kTwoPi * 0.8, 1e-12);
}

TEST(KH, NormIsWavenumber)
{
    Rng r;
    for (int i = 0; i < 1000; ++i) {
        Vec2 z, xs, unused;
        draw(r, z, xs, unused);
        EXPECT_NEAR(k_h(z, xs, k).norm() / k, 1.0, 1e-9);
    }
}

TEST(KG, SelfMatchIsZero)
{
    const auto g = k_g({1, 2}, {5, 5}, {5, 5}, k);
    EXPECT_EQ(g.k1, 0.0);
    EXPECT_EQ(g.k2, 0.0);
}

TEST(KG, AntipodalCollinearReachesTwoK)
{
    const auto g = k_g({0, 0}, {0, -7}, {0, 3}, k);
    EXPECT_NEAR(g.norm(), 2.0 * k, 1e-12);
}

TEST(KG, AntisymmetricAndBounded)
{
    Rng r;
    for (int i = 0; i < 1000; ++i) {
        Vec2 z, a, b;
        draw(r, z, a, b);
        const auto p = k_g(z, a, b, k), q = k_g(z, b, a, k);
        EXPECT_NEAR(p.k1, -q.k1, 1e-12);
        EXPECT_NEAR(p.k2, -q.k2, 1e-12);
        EXPECT_LE(p.norm(), 2.0 * k * (1.0 + 1e-12));
    }
}

TEST(KG, FarFieldDependsOnlyOnDirections)
{
    const Vec2 xs{3e4, 4e4}, xt{-4e4, 3e4};
    const auto g1 = k_g({0, 0}, xt, xs, k), g2 = k_g({2, -3}, xt, xs, k);
    const Vec2 s = xs / norm(xs), st = xt / norm(xt);
    EXPECT_NEAR(g1.k1, k * (s.x - st.x), 1e-3 * k);
    EXPECT_NEAR(g1.k2, k * (s.y - st.y), 1e-3 * k);
    EXPECT_NEAR(g1.k1, g2.k1, 1e-3 * k);
}

TEST(GradientCheck, KhAndKgMatchFiniteDifferences)
{
    Rng r;
    const double h = 1e-4;
    for (int i = 0; i < 1000; ++i) {
        Vec2 z, xt, xs;
        draw(r, z, xt, xs);
        const auto kh = k_h(z, xs, k);
        // k_h is the gradient of the received phase taken toward the source; φ_h = -k|x_s - z|
        const double dx = central([&](double t) { return phase_h(z + Vec2{t, 0}, xs, k); }, h);
        const double dy = central([&](double t) { return phase_h(z + Vec2{0, t}, xs, k); }, h);
        EXPECT_LT(rel(kh.k1, dx, k), 1e-5);
        EXPECT_LT(rel(kh.k2, dy, k), 1e-5);
        const auto kg = k_g(z, xt, xs, k);
        const double gx = central([&](double t) { return phase_g(z + Vec2{t, 0}, xt, xs, k); }, h);
        const double gy = central([&](double t) { return phase_g(z + Vec2{0, t}, xt, xs, k); }, h);
        const double scale = std::max(kg.norm(), 1e-3 * k);
        EXPECT_LT(rel(kg.k1, gx, scale), 1e-5);
        EXPECT_LT(rel(kg.k2, gy, scale), 1e-5);
    }
}

TEST(GradientCheck, PolarKgIsTheRotatedCartesianGradient)
{
    Rng r;
    for (int i = 0; i < 1000; ++i) {
        Vec2 z, xt, xs;
        draw(r, z, xt, xs);
        if (norm(z) < 1.0) continue;
        const auto c = k_g(z, xt, xs, k);
        const auto p = k_g_polar(z, xt, xs, k);
        const double th = std::atan2(z.y, z.x), rz = norm(z);
        const Vec2 er{std::cos(th), std::sin(th)}, et{-std::sin(th), std::cos(th)};
        const double scale = std::max(c.norm(), 1e-6);
        EXPECT_LT(rel(p.k1, c.k1 * er.x + c.k2 * er.y, scale), 1e-9);
        EXPECT_LT(rel(k_theta_arc(p, rz), c.k1 * et.x + c.k2 * et.y, scale), 1e-9);
        EXPECT_NEAR(p.k2, rz * (c.k1 * et.x + c.k2 * et.y), 1e-9 * rz * scale);
    }
}

TEST(GradientCheck, PolarKhAboutAnOffsetOrigin)
{
    const Vec2 o{10.0, -5.0}, z{25.0, 3.0}, xs{-4.0, 30.0};
    const auto p = k_h_polar(z, xs, k, o);
    const PolarCoord zp = to_polar(z - o);
    auto at = [&](double r, double t) { return o + from_polar({r, t}); };
    const double h = 1e-5;
    const double dr = (phase_h(at(zp.r + h, zp.theta), xs, k) - phase_h(at(zp.r - h, zp.theta), xs, k)) / (2 * h);
    const double dt = (phase_h(at(zp.r, zp.theta + h), xs, k) - phase_h(at(zp.r, zp.theta - h), xs, k)) / (2 * h);
    EXPECT_NEAR(p.k1, dr, 1e-5 * k);
    EXPECT_NEAR(p.k2, dt, 1e-5 * k * zp.r);
}

TEST(PolarKg, AngularComponentBoundedByTwoKR)
{
    const double R = 40.0;
    const auto ring = build_circular(720, kTwoPi, R);
    Rng r;
    for (int t = 0; t < 200; ++t) {
        Vec2 xs = r.point(-R, R), xt = r.point(-R, R);
        if (norm(xs) > 0.9 * R || norm(xt) > 0.9 * R) continue;
        for (const Vec2 z : ring.elements) EXPECT_LE(std::abs(k_g_polar(z, xt, xs, k).k2), 2.0 * k * R * (1 + 1e-12));
    }
}

TEST(SecondDerivative, VanishesForSelfMatch)
{
    Rng r;
    for (int i = 0; i < 100; ++i) {
        const Vec2 z = r.point(), xs = r.point(60, 90);
        for (Axis a : {Axis::x, Axis::y, Axis::r, Axis::theta})
            EXPECT_EQ(phase_second_derivative(z, xs, xs, k, a), 0.0);
    }
}

TEST(SecondDerivative, MatchesFiniteDifferences)
{
    Rng r;
    const double h = 1e-3;
    for (int i = 0; i < 500; ++i) {
        Vec2 z, xt, xs;
        draw(r, z, xt, xs, 2.0);
        auto fx = [&](double t) { return k_g(z + Vec2{t, 0}, xt, xs, k).k1; };
        auto fy = [&](double t) { return k_g(z + Vec2{0, t}, xt, xs, k).k2; };
        const double sx = phase_second_derivative(z, xt, xs, k, Axis::x);
        const double sy = phase_second_derivative(z, xt, xs, k, Axis::y);
        const double scale = std::abs(sx) + std::abs(sy) + k * (1.0 / distance(z, xs) + 1.0 / distance(z, xt)) * 1e-3;
        EXPECT_LT(std::abs(sx - central(fx, h)), 1e-5 * scale + 1e-6);
        EXPECT_LT(std::abs(sy - central(fy, h)), 1e-5 * scale + 1e-6);
    }
}

TEST(SecondDerivative, CircularFarFieldLimit)
{
    // Large circle, sources near the centre: ∂²φ/∂θ² → -k r_ss cos(θ_z - θ_ss)
    const Vec2 xs{-10, -10}, xt{10, 10};
    const double R = 1e5;
    for (double th = 0.0; th < kTwoPi; th += 0.37) {
        const Vec2 z{R * std::cos(th), R * std::sin(th)};
        const double exact = phase_second_derivative(z, xt, xs, k, Axis::theta);
        const double approx = ff_phi_circular_dtheta2(th, xt, xs, k);
        EXPECT_NEAR(exact, approx, 1e-2 * k * 20 * std::sqrt(2.0));
    }
}

TEST(Singularity, GuardedDistanceThrows)
{
    EXPECT_THROW(guarded_distance({1, 1}, {1, 1 + 1e-7}), SingularityError);
    EXPECT_NO_THROW(guarded_distance({1, 1}, {1, 1 + 1e-5}));
    EXPECT_THROW(k_h({0, 0}, {0, 0}, k), SingularityError);
}

TEST(AmplitudeNeglected, WavevectorsIgnoreDistanceScaling)
{
    // scaling all distances leaves unit directions, hence k_h, unchanged
    const Vec2 z{1, 2}, xs{7, 11};
    const auto a = k_h(z, xs, k);
    const auto b = k_h(z * 3.0, xs * 3.0, k);
    EXPECT_NEAR(a.k1, b.k1, 1e-12);
    EXPECT_NEAR(a.k2, b.k2, 1e-12);
}
