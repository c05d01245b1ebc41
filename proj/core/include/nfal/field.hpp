// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nfal/types.hpp"

namespace nfal {

// (kx, ky) in rad/λ, or (kr, kθ) when polar: kr in rad/λ, kθ in rad per rad of θ_z
struct WaveVector {
    double k1 = 0.0;
    double k2 = 0.0;
    bool polar = false;

    double norm() const { return std::hypot(k1, k2); }
};

// exp(-j k |x - z|) / |x - z|
cplx channel(Vec2 z, Vec2 x, double k);

// h(z, x_s) * conj(h(z, x_test))
cplx matched_product(Vec2 z, Vec2 x_test, Vec2 x_s, double k);

// Unit-amplitude variant used for chirp-only spectra.
cplx matched_phase(Vec2 z, Vec2 x_test, Vec2 x_s, double k);

double phase_h(Vec2 z, Vec2 x_s, double k);
double phase_g(Vec2 z, Vec2 x_test, Vec2 x_s, double k);

// gradient of phase_h with respect to z: points from z toward x_s, norm k
WaveVector k_h(Vec2 z, Vec2 x_s, double k);
WaveVector k_g(Vec2 z, Vec2 x_test, Vec2 x_s, double k);

// Derivatives of the phases in (r_z, θ_z) about `origin`. kθ keeps the r_z
// factor, so kθ / r_z is the tangential Cartesian component.
WaveVector k_h_polar(Vec2 z, Vec2 x_s, double k, Vec2 origin = {});
WaveVector k_g_polar(Vec2 z, Vec2 x_test, Vec2 x_s, double k, Vec2 origin = {});

// arc-length form of kθ, i.e. kθ / r_z
double k_theta_arc(const WaveVector& polar_kg, double r_z);

// Analytic ∂²φ_g/∂z_i². Axis x, y: rad/λ². Axis r, theta: derivatives in the
// polar coordinates of z about `origin`.
double phase_second_derivative(Vec2 z, Vec2 x_test, Vec2 x_s, double k, Axis axis, Vec2 origin = {});

// throws SingularityError when |a - b| <= kSingularityGuard
double guarded_distance(Vec2 a, Vec2 b);

} // namespace nfal
