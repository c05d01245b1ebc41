// SPDX-License-Identifier: Apache-2.0
#include "nfal/ambiguity.hpp"
#include "nfal/field.hpp"
#include "nfal/io.hpp"
#include "nfal/parallel.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace nfal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double mag_or_nan(const ScalarFieldGrid& g, std::size_t i, std::size_t j)
{
    const cplx v = g.values[g.grid.index(i, j)];
    return std::isnan(v.real()) ? kNaN : std::abs(v);
}

// vertex offset and value of the parabola through (-1,a), (0,b), (1,c)
void parabola(double a, double b, double c, double& offset, double& value)
{
    const double den = a - 2.0 * b + c;
    if (!(den < 0.0) || std::isnan(a) || std::isnan(c)) {
        offset = 0.0;
        value = b;
        return;
    }
    offset = std::clamp(0.5 * (a - c) / den, -0.5, 0.5);
    value = b - 0.25 * (a - c) * offset;
}

// distance from the peak sample to the 50 % crossing walking in direction step
double half_width(const ScalarFieldGrid& g, std::size_t i, std::size_t j, int di, int dj, double half,
                  double cell)
{
    long ci = static_cast<long>(i), cj = static_cast<long>(j);
    double prev = mag_or_nan(g, i, j);
    for (long n = 1;; ++n) {
        const long ni = ci + di * n, nj = cj + dj * n;
        if (ni < 0 || nj < 0 || ni >= static_cast<long>(g.grid.nx) || nj >= static_cast<long>(g.grid.ny))
            throw BorderPeakError("half-maximum crossing lies outside the grid");
        const double m = mag_or_nan(g, static_cast<std::size_t>(ni), static_cast<std::size_t>(nj));
        if (std::isnan(m)) throw BorderPeakError("half-maximum profile crosses an invalid cell");
        if (m < half) {
            const double t = (prev - half) / (prev - m);
            return (static_cast<double>(n - 1) + t) * cell;
        }
        prev = m;
    }
}

} // namespace

std::vector<double> ScalarFieldGrid::db(double ref, double floor_db) const
{
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!valid(i)) {
            out[i] = kNaN;
            continue;
        }
        const double m = std::abs(values[i]) / ref;
        out[i] = m > 0.0 ? std::max(20.0 * std::log10(m), floor_db) : floor_db;
    }
    return out;
}

double ScalarFieldGrid::peak_magnitude() const
{
    double best = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (valid(i)) best = std::max(best, std::abs(values[i]));
    return best;
}

cplx af_at(const ArrayGeometry& array, Vec2 x_test, Vec2 x_s, double k)
{
    CompensatedSum acc;
    for (const auto& z : array.elements) acc.add(matched_product(z, x_test, x_s, k));
    return acc.value();
}

ScalarFieldGrid evaluate_af(const ArrayGeometry& array, const Scene& scene)
{
    if (array.empty()) throw InvalidArgument("evaluate_af: empty array");
    scene.validate(array);
    const double k = scene.wavenumber();

    const std::size_t n = array.size();
    std::vector<double> ds(n);
    for (std::size_t a = 0; a < n; ++a) ds[a] = guarded_distance(array.elements[a], scene.source);

    ScalarFieldGrid out;
    out.grid = scene.grid;
    out.values.assign(scene.grid.size(), cplx{});
    parallel_for(out.values.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t idx = b; idx < e; ++idx) {
            const Vec2 p = scene.grid.center(idx);
            CompensatedSum acc;
            bool ok = true;
            for (std::size_t a = 0; a < n; ++a) {
                const double dt = distance(array.elements[a], p);
                if (!(dt > kSingularityGuard)) {
                    ok = false;
                    break;
                }
                acc.add(std::polar(1.0 / (ds[a] * dt), -k * (ds[a] - dt)));
            }
            out.values[idx] = ok ? acc.value() : cplx{kNaN, kNaN};
        }
    });
    return out;
}

PeakReport measure_peak(const ScalarFieldGrid& g, Vec2 near)
{
    const GridSpec& gs = g.grid;
    if (!gs.region.contains(near)) throw InvalidArgument("measure_peak: start point outside the grid region");
    auto clampi = [](double v, std::size_t n) {
        const long i = static_cast<long>(std::floor(v));
        return static_cast<std::size_t>(std::clamp<long>(i, 0, static_cast<long>(n) - 1));
    };
    std::size_t i = clampi((near.x - gs.region.xmin) / gs.dx(), gs.nx);
    std::size_t j = clampi((near.y - gs.region.ymin) / gs.dy(), gs.ny);
    if (!g.valid(gs.index(i, j))) throw InvalidArgument("measure_peak: start cell is invalid");

    for (;;) {
        double best = mag_or_nan(g, i, j);
        std::size_t bi = i, bj = j;
        for (int dj = -1; dj <= 1; ++dj)
            for (int di = -1; di <= 1; ++di) {
                const long ni = static_cast<long>(i) + di, nj = static_cast<long>(j) + dj;
                if (ni < 0 || nj < 0 || ni >= static_cast<long>(gs.nx) || nj >= static_cast<long>(gs.ny)) continue;
                const double m = mag_or_nan(g, static_cast<std::size_t>(ni), static_cast<std::size_t>(nj));
                if (m > best) {
                    best = m;
                    bi = static_cast<std::size_t>(ni);
                    bj = static_cast<std::size_t>(nj);
                }
            }
        if (bi == i && bj == j) break;
        i = bi;
        j = bj;
    }
    if (i == 0 || j == 0 || i + 1 == gs.nx || j + 1 == gs.ny)
        throw BorderPeakError("peak lies on the grid border");

    const double b = mag_or_nan(g, i, j);
    double ox = 0.0, vx = b, oy = 0.0, vy = b;
    parabola(mag_or_nan(g, i - 1, j), b, mag_or_nan(g, i + 1, j), ox, vx);
    parabola(mag_or_nan(g, i, j - 1), b, mag_or_nan(g, i, j + 1), oy, vy);

    PeakReport rep;
    rep.location = {gs.x(i) + ox * gs.dx(), gs.y(j) + oy * gs.dy()};
    rep.value = vx + vy - b;
    const double half = 0.5 * rep.value;
    rep.fwhm_x = half_width(g, i, j, -1, 0, half, gs.dx()) + half_width(g, i, j, 1, 0, half, gs.dx());
    rep.fwhm_y = half_width(g, i, j, 0, -1, half, gs.dy()) + half_width(g, i, j, 0, 1, half, gs.dy());
    return rep;
}

void write_grid_csv(std::ostream& os, const ScalarFieldGrid& g, double floor_db)
{
    const double ref = g.peak_magnitude();
    const auto db = g.db(ref > 0.0 ? ref : 1.0, floor_db);
    const auto& r = g.grid.region;
    os << "# nfal-grid 1\n";
    os << "# region " << io::fmt(r.xmin) << ' ' << io::fmt(r.xmax) << ' ' << io::fmt(r.ymin) << ' '
       << io::fmt(r.ymax) << '\n';
    os << "# shape " << g.grid.nx << ' ' << g.grid.ny << '\n';
    os << "# reference " << io::fmt(ref) << '\n';
    os << "x,y,re,im,abs,db\n";
    for (std::size_t idx = 0; idx < g.values.size(); ++idx) {
        const Vec2 p = g.grid.center(idx);
        const cplx v = g.values[idx];
        os << io::fmt(p.x) << ',' << io::fmt(p.y) << ',' << io::fmt(v.real()) << ',' << io::fmt(v.imag()) << ','
           << io::fmt(g.valid(idx) ? std::abs(v) : kNaN) << ',' << io::fmt(db[idx]) << '\n';
    }
}

void write_grid_pgm(std::ostream& os, const ScalarFieldGrid& g, double floor_db)
{
    const double ref = g.peak_magnitude();
    const auto db = g.db(ref > 0.0 ? ref : 1.0, floor_db);
    std::vector<std::uint16_t> px(g.values.size());
    for (std::size_t row = 0; row < g.grid.ny; ++row) {
        const std::size_t j = g.grid.ny - 1 - row;
        for (std::size_t i = 0; i < g.grid.nx; ++i)
            px[row * g.grid.nx + i] = io::to_u16(db[g.grid.index(i, j)], floor_db, 0.0);
    }
    io::write_pgm16(os, g.grid.nx, g.grid.ny, px);
}

} // namespace nfal
