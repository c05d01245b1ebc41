// SPDX-License-Identifier: Apache-2.0
#include "nfal/loci.hpp"

#include <algorithm>
#include <limits>

namespace nfal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double curve_length(const SamplingCurve& c)
{
    return c.kind == SamplingCurve::Kind::line ? distance(c.p0, c.p1) : std::abs(c.t1 - c.t0);
}

} // namespace

double ConicCoefficients::evaluate(double x, double A) const
{
    return a * x * x + b * x * A + c * A * A + d * x + e * A + f;
}

double ConicCoefficients::relative_residual(double x, double A) const
{
    const double scale = std::abs(a * x * x) + std::abs(b * x * A) + std::abs(c * A * A) + std::abs(d * x) +
                         std::abs(e * A) + std::abs(f);
    return scale > 0.0 ? std::abs(evaluate(x, A)) / scale : 0.0;
}

ConicCoefficients hyperbola_coefficients(Vec2 x_test, Vec2 x_s)
{
    const double eps = x_s.y - x_test.y;
    if (std::abs(eps) < 1e-12) throw DegenerateExpansionError("hyperbola_coefficients: y_s equals the test y");
    const double dx = x_test.x - x_s.x;
    ConicCoefficients cc;
    cc.eps = eps;
    cc.y_s = x_s.y;
    cc.u0 = x_s.x;
    cc.u1 = -0.75 * dx / eps;
    cc.u2 = (9.0 / 16.0) * dx * dx / (eps * eps) + 0.5;
    cc.u3 = (x_s.x * x_s.x - x_test.x * x_test.x - eps * eps) / (-4.0 * eps / 3.0) - 1.5 * x_s.x * dx / eps;
    // expansion of (x - (A u1 + u0))² - (A² u2 + A u3) = 0
    cc.a = 1.0;
    cc.b = -2.0 * cc.u1;
    cc.c = cc.u1 * cc.u1 - cc.u2;
    cc.d = -2.0 * cc.u0;
    cc.e = 2.0 * cc.u0 * cc.u1 - cc.u3;
    cc.f = cc.u0 * cc.u0;
    return cc;
}

double AsymptoteLine::distance(double x, double A) const
{
    if (vertical) return kNaN;
    return std::abs(A - m * x - p) / std::sqrt(1.0 + m * m);
}

std::pair<AsymptoteLine, AsymptoteLine> asymptotes(const ConicCoefficients& c)
{
    const double D = c.discriminant();
    if (!(D > 0.0)) throw InvalidArgument("asymptotes: conic is not a hyperbola");
    auto make = [&](double sign) {
        AsymptoteLine l;
        l.m = (-c.b + sign * std::sqrt(D)) / (2.0 * c.c);
        const double den = c.b + 2.0 * c.c * l.m;
        if (std::abs(den) < 1e-14) {
            l.vertical = true;
            l.p = kNaN;
        } else {
            l.p = -(c.e * l.m + c.d) / den;
        }
        return l;
    };
    return {make(1.0), make(-1.0)};
}

SamplingCurve SamplingCurve::line(Vec2 a, Vec2 b)
{
    SamplingCurve c;
    c.kind = Kind::line;
    c.p0 = a;
    c.p1 = b;
    return c;
}

SamplingCurve SamplingCurve::arc(Vec2 center, double radius, double t0, double t1)
{
    SamplingCurve c;
    c.kind = Kind::arc;
    c.center = center;
    c.radius = radius;
    c.t0 = t0;
    c.t1 = t1;
    return c;
}

Vec2 SamplingCurve::at(double t) const
{
    if (kind == Kind::line) return p0 + (p1 - p0) * t;
    const double th = t0 + (t1 - t0) * t;
    return center + Vec2{radius * std::cos(th), radius * std::sin(th)};
}

bool SamplingCurve::full_circle() const
{
    return kind == Kind::arc && std::abs(std::abs(t1 - t0) - kTwoPi) < 1e-12;
}

LociResult exact_loci(Vec2 x_test, Vec2 x_s, double k, Axis axis, const SamplingCurve& curve, std::size_t samples)
{
    if (samples < 2) throw InvalidArgument("exact_loci: need at least two samples");
    if (curve.kind == SamplingCurve::Kind::arc && !(curve.radius > 0.0))
        throw InvalidArgument("exact_loci: arc radius must be positive");
    if (curve.kind == SamplingCurve::Kind::line && (axis == Axis::r || axis == Axis::theta))
        throw InvalidArgument("exact_loci: lines take Cartesian axes");
    const double len = curve_length(curve);
    if (!(len > 0.0)) throw InvalidArgument("exact_loci: degenerate sampling curve");

    LociResult res;
    if (distance(x_test, x_s) <= 1e-12) {
        res.degenerate = true;
        return res;
    }

    auto f = [&](double t) {
        try {
            return phase_second_derivative(curve.at(t), x_test, x_s, k, axis, curve.center);
        } catch (const SingularityError&) {
            return kNaN;
        }
    };

    const bool wrap = curve.full_circle();
    const double span = wrap ? static_cast<double>(samples) : static_cast<double>(samples - 1);
    std::vector<double> t(samples), v(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        t[i] = static_cast<double>(i) / span;
        v[i] = f(t[i]);
    }

    const double tol = 1e-10 / len;
    auto refine = [&](double a, double fa, double b, double fb) {
        const double ends = std::max(std::abs(fa), std::abs(fb));
        while ((b - a) > tol) {
            const double m = 0.5 * (a + b);
            const double fm = f(m);
            if (std::isnan(fm)) return;
            if (fm == 0.0) {
                a = b = m;
                break;
            }
            if ((fa < 0.0) == (fm < 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
                fb = fm;
            }
        }
        double r = 0.5 * (a + b);
        const double fr = f(r);
        if (std::isnan(fr) || std::abs(fr) > ends) return; // sign flip through a pole
        if (r >= 1.0) r -= 1.0;
        res.params.push_back(r);
    };

    const std::size_t pairs = wrap ? samples : samples - 1;
    for (std::size_t i = 0; i < pairs; ++i) {
        const std::size_t j = (i + 1) % samples;
        const double a = t[i], b = (j == 0) ? 1.0 : t[j];
        const double fa = v[i], fb = v[j];
        if (std::isnan(fa) || std::isnan(fb)) continue;
        if (fa == 0.0) {
            res.params.push_back(a);
            continue;
        }
        if ((fa < 0.0) != (fb < 0.0) && fb != 0.0) refine(a, fa, b, fb);
    }
    if (!wrap && v.back() == 0.0) res.params.push_back(1.0);

    std::sort(res.params.begin(), res.params.end());
    for (double p : res.params) res.roots.push_back(curve.at(p));
    return res;
}

FarFieldKg ff_kg_approx(Vec2 z, Vec2 x_test, Vec2 x_s, double k)
{
    const double D = norm(x_s), Dt = norm(x_test);
    if (!(D > 0.0) || !(Dt > 0.0)) throw InvalidArgument("ff_kg_approx: points must differ from the origin");
    const Vec2 s = x_s / D, st = x_test / Dt;
    FarFieldKg out;
    out.approx = {k * (s.x - st.x), k * (s.y - st.y), false};
    out.exact = k_g(z, x_test, x_s, k);
    out.rho = std::max(norm(z) / D, norm(z) / Dt);
    out.error = std::hypot(out.approx.k1 - out.exact.k1, out.approx.k2 - out.exact.k2);
    out.c = out.rho > 0.0 ? out.error / (k * out.rho) : 0.0;
    return out;
}

FarFieldPhase ff_phi_circular(Vec2 z, Vec2 x_test, Vec2 x_s, double k)
{
    const double rz = norm(z);
    if (!(rz > 0.0)) throw InvalidArgument("ff_phi_circular: z must differ from the centre");
    const Vec2 ss = x_s - x_test;
    const double rss = norm(ss);
    const double thz = std::atan2(z.y, z.x);
    const double thss = rss > 0.0 ? std::atan2(ss.y, ss.x) : 0.0;
    FarFieldPhase out;
    out.approx = k * rss * std::cos(thz - thss);
    out.exact = phase_g(z, x_test, x_s, k);
    out.error = std::abs(out.approx - out.exact);
    out.rho = std::max(norm(x_s), norm(x_test)) / rz;
    return out;
}

double ff_phi_circular_dtheta2(double theta_z, Vec2 x_test, Vec2 x_s, double k)
{
    const Vec2 ss = x_s - x_test;
    const double rss = norm(ss);
    if (rss == 0.0) return 0.0;
    return -k * rss * std::cos(theta_z - std::atan2(ss.y, ss.x));
}

} // namespace nfal
