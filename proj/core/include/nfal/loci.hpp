// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nfal/field.hpp"

#include <utility>
#include <vector>

namespace nfal {

// Second-order approximation of the critical-antenna locus of a linear array
// along x, in the frame (x, A) with A = y - y_s:
//   a x² + b x A + c A² + d x + e A + f = 0
struct ConicCoefficients {
    double a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
    double u0 = 0, u1 = 0, u2 = 0, u3 = 0;
    double eps = 0;   // y_s - ỹ_s
    double y_s = 0;   // maps A back to scene y

    double discriminant() const { return b * b - 4.0 * a * c; }
    double evaluate(double x, double A) const;
    // |F| / Σ|terms|
    double relative_residual(double x, double A) const;
};

// Throws DegenerateExpansionError when ε = 0.
ConicCoefficients hyperbola_coefficients(Vec2 x_test, Vec2 x_s);

// A = m x + p in the conic frame (scene: y = m x + p + y_s)
struct AsymptoteLine {
    double m = 0.0;
    double p = 0.0;
    bool vertical = false; // b + 2cm = 0; p then undefined

    double distance(double x, double A) const;
};

std::pair<AsymptoteLine, AsymptoteLine> asymptotes(const ConicCoefficients& c);

struct SamplingCurve {
    enum class Kind { line, arc } kind = Kind::line;
    Vec2 p0, p1;                 // line endpoints
    Vec2 center;                 // arc centre (also the polar pole)
    double radius = 0.0;
    double t0 = 0.0, t1 = 0.0;   // arc angles

    static SamplingCurve line(Vec2 a, Vec2 b);
    static SamplingCurve arc(Vec2 center, double radius, double t0, double t1);
    Vec2 at(double t) const;      // t in [0, 1]
    bool full_circle() const;
};

struct LociResult {
    std::vector<Vec2> roots;
    std::vector<double> params; // curve parameter of each root in [0, 1]
    bool degenerate = false;    // x_test == x_s: the second derivative vanishes identically
};

// Zeros of ∂²φ_g/∂z_axis² along the curve: dense sign-change scan then
// bisection to 1e-10 (λ on lines, rad on arcs). Samples inside the
// singularity guard are skipped; brackets around poles are rejected.
LociResult exact_loci(Vec2 x_test, Vec2 x_s, double k, Axis axis, const SamplingCurve& curve,
                      std::size_t samples = 4096);

struct FarFieldKg {
    WaveVector approx;  // k (s - s̃)
    WaveVector exact;
    double rho = 0.0;   // max(|z|/|x_s|, |z|/|x̃_s|)
    double error = 0.0; // |approx - exact|
    double c = 0.0;     // error / (k rho)
};

FarFieldKg ff_kg_approx(Vec2 z, Vec2 x_test, Vec2 x_s, double k);

struct FarFieldPhase {
    double approx = 0.0; // k r_ss cos(θ_z - θ_ss), x_ss = x_s - x̃_s
    double exact = 0.0;
    double error = 0.0;
    double rho = 0.0;    // max(|x_s|, |x̃_s|) / |z|
};

// z, x_test, x_s relative to the circle centre (origin)
FarFieldPhase ff_phi_circular(Vec2 z, Vec2 x_test, Vec2 x_s, double k);
// -k r_ss cos(θ_z - θ_ss)
double ff_phi_circular_dtheta2(double theta_z, Vec2 x_test, Vec2 x_s, double k);

} // namespace nfal
