// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nfal/field.hpp"
#include "nfal/geometry.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace nfal {

enum class SampleWeighting {
    physical,   // g (or h) including the 1/distance amplitudes
    phase_only  // unit-modulus samples, the quantity the chirp model describes
};

enum class SupportMethod {
    marginal_energy, // per-axis energy profile (sum of |S|² over the other axis) >= threshold * its max
    peak_magnitude   // any cell with |S| >= threshold * max |S|
};

struct SupportBox {
    double k1_min = 0.0;
    double k1_max = 0.0;
    double k2_min = 0.0;
    double k2_max = 0.0;

    // max(|min|, |max|) along axis 0 or 1
    double half_extent(int axis) const;
};

struct SpectrumOptions {
    std::optional<Rect> region; // default: [-2.2k, 2.2k] per axis (kθ scaled by the largest radius)
    std::size_t m1 = 256;
    std::size_t m2 = 256;
    double threshold = 0.05;
    SupportMethod method = SupportMethod::marginal_energy;
    SampleWeighting weighting = SampleWeighting::physical;
};

struct SpectrumEstimate {
    Rect wavevector_region;  // (k1, k2) stored as (x, y) of the rectangle
    std::size_t m1 = 0;
    std::size_t m2 = 0;
    std::vector<double> magnitudes; // index j * m1 + i
    double threshold = 0.0;
    SupportMethod method = SupportMethod::marginal_energy;
    SupportBox support;
    bool polar = false;

    double cell1() const { return wavevector_region.width() / static_cast<double>(m1); }
    double cell2() const { return wavevector_region.height() / static_cast<double>(m2); }
    double k1(std::size_t i) const { return wavevector_region.xmin + (static_cast<double>(i) + 0.5) * cell1(); }
    double k2(std::size_t j) const { return wavevector_region.ymin + (static_cast<double>(j) + 0.5) * cell2(); }
};

// G(k) = Σ g(z) e^{-j k·z} over Cartesian antenna positions.
SpectrumEstimate spectrum_g(const ArrayGeometry& array, Vec2 x_test, Vec2 x_s, double k,
                            const SpectrumOptions& opt = {});
// H(k) = Σ h(z, x_s) e^{-j k·z}
SpectrumEstimate spectrum_h(const ArrayGeometry& array, Vec2 x_s, double k, const SpectrumOptions& opt = {});

// Same sums over the sample coordinates (r_z, θ_z) of a polar-tagged array.
SpectrumEstimate spectrum_polar_g(const ArrayGeometry& array, Vec2 x_test, Vec2 x_s, double k,
                                  const SpectrumOptions& opt = {});
SpectrumEstimate spectrum_polar_h(const ArrayGeometry& array, Vec2 x_s, double k, const SpectrumOptions& opt = {});

// Single wavevector, compensated sum. At kvec = 0 with physical weighting this
// is bit-identical to af_at().
cplx spectrum_g_at(const ArrayGeometry& array, Vec2 x_test, Vec2 x_s, double k, Vec2 kvec,
                   SampleWeighting w = SampleWeighting::physical);

SupportBox extract_support(const std::vector<double>& magnitudes, const Rect& region, std::size_t m1, std::size_t m2,
                           double threshold, SupportMethod method);

Rect default_wavevector_region(const ArrayGeometry& array, double k, bool polar);

// CSV (k1,k2,magnitude,db) with '#' metadata, and 16-bit PGM like the AF grids.
void write_spectrum_csv(std::ostream& os, const SpectrumEstimate& s, double floor_db = -60.0);
void write_spectrum_pgm(std::ostream& os, const SpectrumEstimate& s, double floor_db = -60.0);

} // namespace nfal
