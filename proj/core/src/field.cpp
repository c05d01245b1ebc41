// SPDX-License-Identifier: Apache-2.0
#include "nfal/field.hpp"

#include <string>

namespace nfal {

namespace {

// first and second derivatives of d = |z - x| with z parametrised in polar
// coordinates (r, t) about the pole; x given relative to the same pole
struct PolarDist {
    double d, dr, dt, drr, dtt;
};

PolarDist polar_dist(double r, double t, Vec2 x_rel)
{
    const double rx = norm(x_rel);
    const double tx = rx == 0.0 ? 0.0 : std::atan2(x_rel.y, x_rel.x);
    const double c = std::cos(t - tx);
    const double s = std::sin(t - tx);
    const double d = guarded_distance(Vec2{r * std::cos(t), r * std::sin(t)}, x_rel);
    const double a = r - rx * c;   // ∂(d²/2)/∂r
    const double b = r * rx * s;   // ∂(d²/2)/∂t
    PolarDist p{};
    p.d = d;
    p.dr = a / d;
    p.dt = b / d;
    p.drr = 1.0 / d - a * a / (d * d * d);
    p.dtt = r * rx * c / d - b * b / (d * d * d);
    return p;
}

Vec2 rel_polar(Vec2 z, Vec2 origin, double& r, double& t)
{
    const Vec2 q = z - origin;
    r = norm(q);
    t = std::atan2(q.y, q.x);
    return q;
}

} // namespace

double guarded_distance(Vec2 a, Vec2 b)
{
    const double d = distance(a, b);
    if (!(d > kSingularityGuard))
        throw SingularityError("points closer than the singularity guard (" + std::to_string(d) + " λ)");
    return d;
}

cplx channel(Vec2 z, Vec2 x, double k)
{
    const double d = guarded_distance(z, x);
    return std::polar(1.0 / d, -k * d);
}

cplx matched_product(Vec2 z, Vec2 x_test, Vec2 x_s, double k)
{
    const double ds = guarded_distance(z, x_s);
    const double dt = guarded_distance(z, x_test);
    return std::polar(1.0 / (ds * dt), -k * (ds - dt));
}

cplx matched_phase(Vec2 z, Vec2 x_test, Vec2 x_s, double k)
{
    const double ds = guarded_distance(z, x_s);
    const double dt = guarded_distance(z, x_test);
    return std::polar(1.0, -k * (ds - dt));
}

double phase_h(Vec2 z, Vec2 x_s, double k) { return -k * guarded_distance(z, x_s); }

double phase_g(Vec2 z, Vec2 x_test, Vec2 x_s, double k)
{
    return -k * (guarded_distance(z, x_s) - guarded_distance(z, x_test));
}

WaveVector k_h(Vec2 z, Vec2 x_s, double k)
{
    const Vec2 v = x_s - z;
    const double d = guarded_distance(z, x_s);
    return {k * v.x / d, k * v.y / d, false};
}

WaveVector k_g(Vec2 z, Vec2 x_test, Vec2 x_s, double k)
{
    const WaveVector a = k_h(z, x_s, k);
    const WaveVector b = k_h(z, x_test, k);
    return {a.k1 - b.k1, a.k2 - b.k2, false};
}

WaveVector k_h_polar(Vec2 z, Vec2 x_s, double k, Vec2 origin)
{
    double r = 0.0, t = 0.0;
    rel_polar(z, origin, r, t);
    const PolarDist s = polar_dist(r, t, x_s - origin);
    return {-k * s.dr, -k * s.dt, true};
}

WaveVector k_g_polar(Vec2 z, Vec2 x_test, Vec2 x_s, double k, Vec2 origin)
{
    double r = 0.0, t = 0.0;
    rel_polar(z, origin, r, t);
    const PolarDist s = polar_dist(r, t, x_s - origin);
    const PolarDist q = polar_dist(r, t, x_test - origin);
    return {k * (q.dr - s.dr), k * (q.dt - s.dt), true};
}

double k_theta_arc(const WaveVector& polar_kg, double r_z)
{
    if (!(r_z > 0.0)) throw InvalidArgument("k_theta_arc: r_z must be positive");
    return polar_kg.k2 / r_z;
}

double phase_second_derivative(Vec2 z, Vec2 x_test, Vec2 x_s, double k, Axis axis, Vec2 origin)
{
    switch (axis) {
    case Axis::x:
    case Axis::y: {
        const double ds = guarded_distance(z, x_s);
        const double dt = guarded_distance(z, x_test);
        const double es = axis == Axis::x ? (z.x - x_s.x) : (z.y - x_s.y);
        const double et = axis == Axis::x ? (z.x - x_test.x) : (z.y - x_test.y);
        // ∂²d/∂z_i² = (d² - e_i²) / d³
        const double s2 = (ds * ds - es * es) / (ds * ds * ds);
        const double t2 = (dt * dt - et * et) / (dt * dt * dt);
        return -k * (s2 - t2);
    }
    case Axis::r:
    case Axis::theta: {
        double r = 0.0, t = 0.0;
        rel_polar(z, origin, r, t);
        const PolarDist s = polar_dist(r, t, x_s - origin);
        const PolarDist q = polar_dist(r, t, x_test - origin);
        return axis == Axis::r ? -k * (s.drr - q.drr) : -k * (s.dtt - q.dtt);
    }
    default:
        throw InvalidArgument("phase_second_derivative: axis must be x, y, r or theta");
    }
}

} // namespace nfal
