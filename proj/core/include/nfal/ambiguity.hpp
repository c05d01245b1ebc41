// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nfal/geometry.hpp"

#include <iosfwd>
#include <vector>

namespace nfal {

// Neumaier-compensated complex sum. Order-insensitive to ~1e-16 relative.
class CompensatedSum {
public:
    void add(cplx v)
    {
        add1(re_, cre_, v.real());
        add1(im_, cim_, v.imag());
    }
    cplx value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add1(double& s, double& c, double v)
    {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

// Complex values at cell centres; invalid cells hold NaN.
struct ScalarFieldGrid {
    GridSpec grid;
    std::vector<cplx> values;

    double magnitude(std::size_t idx) const { return std::abs(values[idx]); }
    bool valid(std::size_t idx) const { return !std::isnan(values[idx].real()); }
    // |value| / ref in dB, floored; NaN stays NaN
    std::vector<double> db(double ref, double floor_db = -60.0) const;
    // max magnitude over valid cells
    double peak_magnitude() const;
};

// Σ_k g(z_k; x_test, x_s), shared by the AF and the spectrum at k = 0
cplx af_at(const ArrayGeometry& array, Vec2 x_test, Vec2 x_s, double k);

// Grid cells inside the singularity guard of any antenna are NaN.
ScalarFieldGrid evaluate_af(const ArrayGeometry& array, const Scene& scene);

struct PeakReport {
    Vec2 location;
    double value = 0.0;
    double fwhm_x = 0.0;
    double fwhm_y = 0.0;
};

// Climbs from the cell nearest `near` to a local maximum of |AF|, refines it by
// 3-point parabolas and measures the 50 % widths on the row and column through it.
PeakReport measure_peak(const ScalarFieldGrid& grid, Vec2 near);

// CSV with '#' metadata lines; columns x,y,re,im,abs,db (dB re peak).
void write_grid_csv(std::ostream& os, const ScalarFieldGrid& grid, double floor_db = -60.0);

// 16-bit binary PGM of dB magnitude; floor_db maps to 0, 0 dB to 65535, first
// row is the top (largest y). Invalid cells map to 0.
void write_grid_pgm(std::ostream& os, const ScalarFieldGrid& grid, double floor_db = -60.0);

} // namespace nfal
