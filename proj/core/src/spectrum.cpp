// SPDX-License-Identifier: Apache-2.0
#include "nfal/spectrum.hpp"
#include "nfal/ambiguity.hpp"
#include "nfal/io.hpp"
#include "nfal/parallel.hpp"

#include <algorithm>
#include <ostream>

namespace nfal {

namespace {

struct Samples {
    std::vector<double> u, v;   // transform coordinates
    std::vector<cplx> s;        // sample values
};

Samples cartesian_samples(const ArrayGeometry& array)
{
    Samples out;
    for (const auto& z : array.elements) {
        out.u.push_back(z.x);
        out.v.push_back(z.y);
    }
    return out;
}

Samples polar_samples(const ArrayGeometry& array)
{
    if (array.coord_system != CoordSystem::polar || array.polar.size() != array.size())
        throw InvalidArgument("polar spectrum requires a polar-tagged array");
    Samples out;
    for (const auto& p : array.polar) {
        out.u.push_back(p.r);
        out.v.push_back(p.theta);
    }
    return out;
}

cplx weight(cplx v, SampleWeighting w)
{
    if (w == SampleWeighting::physical) return v;
    const double m = std::abs(v);
    return m > 0.0 ? v / m : cplx{};
}

SpectrumEstimate transform(const Samples& smp, const Rect& region, const SpectrumOptions& opt, bool polar)
{
    if (opt.m1 == 0 || opt.m2 == 0) throw InvalidArgument("spectrum: shape must be positive");
    if (!(region.width() > 0.0) || !(region.height() > 0.0))
        throw InvalidArgument("spectrum: wavevector region must have positive area");
    if (!(opt.threshold > 0.0 && opt.threshold < 1.0)) throw InvalidArgument("spectrum: threshold must lie in (0, 1)");

    SpectrumEstimate est;
    est.wavevector_region = region;
    est.m1 = opt.m1;
    est.m2 = opt.m2;
    est.threshold = opt.threshold;
    est.method = opt.method;
    est.polar = polar;
    est.magnitudes.assign(opt.m1 * opt.m2, 0.0);

    const std::size_t n = smp.s.size();
    const double k1_0 = est.k1(0);
    const double dk1 = est.cell1();
    // per-sample phasor step along k1
    std::vector<cplx> step(n);
    for (std::size_t a = 0; a < n; ++a) step[a] = std::polar(1.0, -dk1 * smp.u[a]);

    parallel_for(opt.m2, [&](std::size_t jb, std::size_t je) {
        std::vector<double> re(opt.m1), im(opt.m1);
        for (std::size_t j = jb; j < je; ++j) {
            std::fill(re.begin(), re.end(), 0.0);
            std::fill(im.begin(), im.end(), 0.0);
            const double k2 = est.k2(j);
            for (std::size_t a = 0; a < n; ++a) {
                cplx w = smp.s[a] * std::polar(1.0, -(k1_0 * smp.u[a] + k2 * smp.v[a]));
                const double sr = step[a].real(), si = step[a].imag();
                double wr = w.real(), wi = w.imag();
                for (std::size_t i = 0; i < opt.m1; ++i) {
                    re[i] += wr;
                    im[i] += wi;
                    const double tr = wr * sr - wi * si;
                    wi = wr * si + wi * sr;
                    wr = tr;
                }
            }
            for (std::size_t i = 0; i < opt.m1; ++i) est.magnitudes[j * opt.m1 + i] = std::hypot(re[i], im[i]);
        }
    });
    est.support = extract_support(est.magnitudes, region, opt.m1, opt.m2, opt.threshold, opt.method);
    return est;
}

void write_spectrum_header(std::ostream& os, const SpectrumEstimate& s, double ref)
{
    const auto& r = s.wavevector_region;
    os << "# nfal-spectrum 1\n";
    os << "# frame " << (s.polar ? "polar" : "cartesian") << '\n';
    os << "# region " << io::fmt(r.xmin) << ' ' << io::fmt(r.xmax) << ' ' << io::fmt(r.ymin) << ' ' << io::fmt(r.ymax)
       << '\n';
    os << "# shape " << s.m1 << ' ' << s.m2 << '\n';
    os << "# threshold " << io::fmt(s.threshold) << ' '
       << (s.method == SupportMethod::marginal_energy ? "marginal_energy" : "peak_magnitude") << '\n';
    os << "# support " << io::fmt(s.support.k1_min) << ' ' << io::fmt(s.support.k1_max) << ' '
       << io::fmt(s.support.k2_min) << ' ' << io::fmt(s.support.k2_max) << '\n';
    os << "# reference " << io::fmt(ref) << '\n';
}

double db_of(double m, double ref, double floor_db)
{
    return m > 0.0 && ref > 0.0 ? std::max(20.0 * std::log10(m / ref), floor_db) : floor_db;
}

} // namespace

double SupportBox::half_extent(int axis) const
{
    return axis == 0 ? std::max(std::abs(k1_min), std::abs(k1_max)) : std::max(std::abs(k2_min), std::abs(k2_max));
}

Rect default_wavevector_region(const ArrayGeometry& array, double k, bool polar)
{
    const double e = 2.2 * k;
    if (!polar) return {-e, e, -e, e};
    double rmax = 0.0;
    for (const auto& p : array.polar) rmax = std::max(rmax, p.r);
    return {-e, e, -e * rmax, e * rmax};
}

SupportBox extract_support(const std::vector<double>& mag, const Rect& region, std::size_t m1, std::size_t m2,
                           double threshold, SupportMethod method)
{
    if (mag.size() != m1 * m2 || mag.empty()) throw InvalidArgument("extract_support: shape mismatch");
    const double c1 = region.width() / static_cast<double>(m1);
    const double c2 = region.height() / static_cast<double>(m2);
    auto k1 = [&](std::size_t i) { return region.xmin + (static_cast<double>(i) + 0.5) * c1; };
    auto k2 = [&](std::size_t j) { return region.ymin + (static_cast<double>(j) + 0.5) * c2; };

    std::size_t i_lo = m1, i_hi = 0, j_lo = m2, j_hi = 0;
    if (method == SupportMethod::peak_magnitude) {
        const double lim = threshold * *std::max_element(mag.begin(), mag.end());
        for (std::size_t j = 0; j < m2; ++j)
            for (std::size_t i = 0; i < m1; ++i)
                if (mag[j * m1 + i] >= lim) {
                    i_lo = std::min(i_lo, i);
                    i_hi = std::max(i_hi, i);
                    j_lo = std::min(j_lo, j);
                    j_hi = std::max(j_hi, j);
                }
    } else {
        std::vector<double> p1(m1, 0.0), p2(m2, 0.0);
        for (std::size_t j = 0; j < m2; ++j)
            for (std::size_t i = 0; i < m1; ++i) {
                const double e = mag[j * m1 + i] * mag[j * m1 + i];
                p1[i] += e;
                p2[j] += e;
            }
        const double l1 = threshold * *std::max_element(p1.begin(), p1.end());
        const double l2 = threshold * *std::max_element(p2.begin(), p2.end());
        for (std::size_t i = 0; i < m1; ++i)
            if (p1[i] >= l1) {
                i_lo = std::min(i_lo, i);
                i_hi = std::max(i_hi, i);
            }
        for (std::size_t j = 0; j < m2; ++j)
            if (p2[j] >= l2) {
                j_lo = std::min(j_lo, j);
                j_hi = std::max(j_hi, j);
            }
    }
    if (i_lo > i_hi || j_lo > j_hi) return {0.0, 0.0, 0.0, 0.0}; // all-zero spectrum
    return {k1(i_lo), k1(i_hi), k2(j_lo), k2(j_hi)};
}

SpectrumEstimate spectrum_g(const ArrayGeometry& array, Vec2 x_test, Vec2 x_s, double k, const SpectrumOptions& opt)
{
    if (array.empty()) throw InvalidArgument("spectrum_g: empty array");
    Samples smp = cartesian_samples(array);
    for (const auto& z : array.elements) smp.s.push_back(weight(matched_product(z, x_test, x_s, k), opt.weighting));
    return transform(smp, opt.region.value_or(default_wavevector_region(array, k, false)), opt, false);
}

SpectrumEstimate spectrum_h(const ArrayGeometry& array, Vec2 x_s, double k, const SpectrumOptions& opt)
{
    if (array.empty()) throw InvalidArgument("spectrum_h: empty array");
    Samples smp = cartesian_samples(array);
    for (const auto& z : array.elements) smp.s.push_back(weight(channel(z, x_s, k), opt.weighting));
    return transform(smp, opt.region.value_or(default_wavevector_region(array, k, false)), opt, false);
}

SpectrumEstimate spectrum_polar_g(const ArrayGeometry& array, Vec2 x_test, Vec2 x_s, double k,
                                  const SpectrumOptions& opt)
{
    if (array.empty()) throw InvalidArgument("spectrum_polar_g: empty array");
    Samples smp = polar_samples(array);
    for (const auto& z : array.elements) smp.s.push_back(weight(matched_product(z, x_test, x_s, k), opt.weighting));
    return transform(smp, opt.region.value_or(default_wavevector_region(array, k, true)), opt, true);
}

SpectrumEstimate spectrum_polar_h(const ArrayGeometry& array, Vec2 x_s, double k, const SpectrumOptions& opt)
{
    if (array.empty()) throw InvalidArgument("spectrum_polar_h: empty array");
    Samples smp = polar_samples(array);
    for (const auto& z : array.elements) smp.s.push_back(weight(channel(z, x_s, k), opt.weighting));
    return transform(smp, opt.region.value_or(default_wavevector_region(array, k, true)), opt, true);
}

cplx spectrum_g_at(const ArrayGeometry& array, Vec2 x_test, Vec2 x_s, double k, Vec2 kvec, SampleWeighting w)
{
    if (array.empty()) throw InvalidArgument("spectrum_g_at: empty array");
    if (kvec == Vec2{} && w == SampleWeighting::physical) return af_at(array, x_test, x_s, k);
    CompensatedSum acc;
    for (const auto& z : array.elements)
        acc.add(weight(matched_product(z, x_test, x_s, k), w) * std::polar(1.0, -dot(kvec, z)));
    return acc.value();
}

void write_spectrum_csv(std::ostream& os, const SpectrumEstimate& s, double floor_db)
{
    const double ref = s.magnitudes.empty() ? 0.0 : *std::max_element(s.magnitudes.begin(), s.magnitudes.end());
    write_spectrum_header(os, s, ref);
    os << (s.polar ? "kr,ktheta,magnitude,db\n" : "k1,k2,magnitude,db\n");
    for (std::size_t j = 0; j < s.m2; ++j)
        for (std::size_t i = 0; i < s.m1; ++i) {
            const double m = s.magnitudes[j * s.m1 + i];
            os << io::fmt(s.k1(i)) << ',' << io::fmt(s.k2(j)) << ',' << io::fmt(m) << ','
               << io::fmt(db_of(m, ref, floor_db)) << '\n';
        }
}

void write_spectrum_pgm(std::ostream& os, const SpectrumEstimate& s, double floor_db)
{
    const double ref = s.magnitudes.empty() ? 0.0 : *std::max_element(s.magnitudes.begin(), s.magnitudes.end());
    std::vector<std::uint16_t> px(s.magnitudes.size());
    for (std::size_t row = 0; row < s.m2; ++row) {
        const std::size_t j = s.m2 - 1 - row;
        for (std::size_t i = 0; i < s.m1; ++i)
            px[row * s.m1 + i] = io::to_u16(db_of(s.magnitudes[j * s.m1 + i], ref, floor_db), floor_db, 0.0);
    }
    io::write_pgm16(os, s.m1, s.m2, px);
}

} // namespace nfal
