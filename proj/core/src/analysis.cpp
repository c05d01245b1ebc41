// SPDX-License-Identifier: Apache-2.0
#include "nfal/analysis.hpp"
#include "nfal/io.hpp"
#include "nfal/parallel.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <string>

namespace nfal {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_polar_axis(Axis a) { return a == Axis::r || a == Axis::theta; }

void require_polar(const ArrayGeometry& array)
{
    if (array.coord_system != CoordSystem::polar)
        throw UnsupportedGeometry("polar axes require a polar-tagged array");
}

// Per-antenna terms of k_g = k (u_s - u_t), with the local polar basis for
// polar-tagged arrays. kr = k_g · e_r, kθ = r_z (k_g · e_θ).
struct KgKernel {
    struct Ant {
        Vec2 z, us, er, et;
        double rz = 0.0;
    };
    std::vector<Ant> ants;
    double k = 0.0;

    KgKernel(const ArrayGeometry& array, Vec2 x_s, double wavenumber) : k(wavenumber)
    {
        ants.reserve(array.size());
        for (const auto& z : array.elements) {
            const double ds = guarded_distance(z, x_s);
            Ant a;
            a.z = z;
            a.us = (x_s - z) / ds;
            if (array.coord_system == CoordSystem::polar) {
                const Vec2 q = z - array.origin;
                a.rz = norm(q);
                a.er = a.rz > 0.0 ? q / a.rz : Vec2{1.0, 0.0};
                a.et = perp(a.er);
            }
            ants.push_back(a);
        }
    }

    // false when x_test sits inside the singularity guard of antenna i
    bool eval(std::size_t i, Vec2 x_test, bool polar, double& c1, double& c2) const
    {
        const Ant& a = ants[i];
        const Vec2 v = x_test - a.z;
        const double dt = norm(v);
        if (!(dt > kSingularityGuard)) return false;
        const Vec2 kg = (a.us - v / dt) * k;
        if (polar) {
            c1 = dot(kg, a.er);
            c2 = a.rz * dot(kg, a.et);
        } else {
            c1 = kg.x;
            c2 = kg.y;
        }
        return true;
    }

    double component(std::size_t i, Vec2 x_test, Axis axis) const
    {
        double c1 = 0.0, c2 = 0.0;
        if (!eval(i, x_test, is_polar_axis(axis), c1, c2))
            throw SingularityError("test point coincides with an antenna");
        return (axis == Axis::x || axis == Axis::r) ? c1 : c2;
    }
};

std::vector<std::size_t> cae_set(const KgKernel& kern, Vec2 x_test, Axis axis, double K)
{
    std::vector<std::size_t> out;
    const double tol = kCaeTieTol * kern.k;
    for (std::size_t i = 0; i < kern.ants.size(); ++i)
        if (std::abs(kern.component(i, x_test, axis)) >= K - tol) out.push_back(i);
    return out;
}

// for each element of a, its index in b (or -1)
std::vector<long> index_map(const ArrayGeometry& a, const ArrayGeometry& b)
{
    std::vector<std::size_t> order(b.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
        return b.elements[p].x < b.elements[q].x;
    });
    std::vector<double> xs(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) xs[i] = b.elements[order[i]].x;
    std::vector<long> out(a.size(), -1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Vec2 p = a.elements[i];
        for (auto it = std::lower_bound(xs.begin(), xs.end(), p.x - 1e-9); it != xs.end() && *it <= p.x + 1e-9; ++it) {
            const std::size_t cand = order[static_cast<std::size_t>(it - xs.begin())];
            if (distance(b.elements[cand], p) <= 1e-9) {
                out[i] = static_cast<long>(cand);
                break;
            }
        }
    }
    return out;
}

void require_same_spacing(const ArrayGeometry& a, const ArrayGeometry& b, const std::vector<Axis>& axes)
{
    for (Axis ax : axes) {
        auto da = a.spacing(ax), db = b.spacing(ax);
        if (!da || !db || std::abs(*da - *db) > 1e-9)
            throw InvalidArgument(std::string("arrays differ in spacing along ") + to_string(ax));
    }
}

// K gradient magnitude at a cell in units of K per cell (central differences where possible)
double grad_per_cell(const GridSpec& g, const std::vector<double>& K, std::size_t cell)
{
    const std::size_t i = cell % g.nx, j = cell / g.nx;
    auto diff = [&](std::size_t lo, std::size_t hi, double span) {
        const double a = K[lo], b = K[hi];
        return (std::isnan(a) || std::isnan(b)) ? 0.0 : (b - a) / span;
    };
    double gx = 0.0, gy = 0.0;
    if (g.nx > 1) {
        const std::size_t lo = i > 0 ? i - 1 : i, hi = i + 1 < g.nx ? i + 1 : i;
        gx = diff(g.index(lo, j), g.index(hi, j), static_cast<double>(hi - lo));
    }
    if (g.ny > 1) {
        const std::size_t lo = j > 0 ? j - 1 : j, hi = j + 1 < g.ny ? j + 1 : j;
        gy = diff(g.index(i, lo), g.index(i, hi), static_cast<double>(hi - lo));
    }
    return std::hypot(gx, gy);
}

enum class Change { removal, addition };

PropositionReport check_change(const ArrayGeometry& small, const ArrayGeometry& large, const Scene& scene,
                               Change mode)
{
    if (!is_subset(small, large)) throw InvalidArgument("proposition check: arrays are not nested");
    const ArrayGeometry& base = mode == Change::removal ? large : small;  // array1
    const ArrayGeometry& other = mode == Change::removal ? small : large; // array2
    const auto axes = default_afr_axes(base);
    require_same_spacing(base, other, axes);

    const AfrDetail d1 = afr_detail(base, scene, axes);
    const AfrDetail d2 = afr_detail(other, scene, axes);
    const double k = scene.wavenumber();
    const KgKernel k1(base, scene.source, k);
    const KgKernel k2(other, scene.source, k);
    const auto base_in_other = index_map(base, other);

    const GridSpec& g = scene.grid;
    const auto bcells = boundary_cells(d1.mask);

    PropositionReport rep;
    rep.boundary_cells = bcells.size();
    for (std::size_t c : bcells) {
        const std::size_t ax = d1.binding_axis(c);
        const Axis axis = axes[ax];
        const Vec2 p = g.center(c);
        const double K1 = d1.K[ax][c];
        const auto c1 = cae_set(k1, p, axis, K1);
        bool keeps = false;
        if (mode == Change::removal) {
            for (std::size_t a : c1) keeps = keeps || base_in_other[a] >= 0;
        } else {
            const auto c2 = cae_set(k2, p, axis, d2.K[ax][c]);
            for (std::size_t a : c1)
                if (std::find(c2.begin(), c2.end(), static_cast<std::size_t>(base_in_other[a])) != c2.end())
                    keeps = true;
        }
        if (keeps) continue;
        ++rep.triggering_cells;
        const double dK = std::abs(d2.K[ax][c] - K1);
        const double gr = grad_per_cell(g, d1.K[ax], c);
        rep.max_shift_cells = std::max(rep.max_shift_cells, gr > 0.0 ? dK / gr : kInf);
    }

    const Verdict change = mode == Change::removal ? Verdict::strictly_larger : Verdict::strictly_smaller;
    rep.predicted = rep.triggering_cells > 0 ? change : Verdict::equal;

    const auto band = boundary_band(d1.mask);
    for (std::size_t c = 0; c < g.size(); ++c) {
        const bool differs = mode == Change::removal ? (d2.mask.bits[c] && !d1.mask.bits[c])
                                                     : (d1.mask.bits[c] && !d2.mask.bits[c]);
        if (!differs) continue;
        ++rep.changed_cells;
        if (!band[c]) rep.changes_near_boundary = false;
    }
    rep.observed = rep.changed_cells > 0 ? change : Verdict::equal;

    rep.agrees = rep.predicted == rep.observed ||
                 (rep.predicted != Verdict::equal && rep.max_shift_cells < 1.0) ||
                 (rep.predicted == Verdict::equal && rep.changes_near_boundary);
    return rep;
}

} // namespace

const AxisBandwidth& BandwidthReport::at(Axis a) const
{
    for (const auto& ab : axes)
        if (ab.axis == a) return ab;
    throw InvalidArgument(std::string("bandwidth report has no axis ") + to_string(a));
}

std::pair<Vec2, Vec2> beam_frame(const ArrayGeometry& array, Vec2 x_s)
{
    const Vec2 d = x_s - array.centroid();
    const double n = norm(d);
    if (!(n > kSingularityGuard)) throw InvalidArgument("beam frame undefined: source at the array centroid");
    const Vec2 u = d / n;
    return {u, perp(u)};
}

double k_h_component(const ArrayGeometry& array, std::size_t idx, Vec2 x_s, double k, Axis axis, Vec2 e1, Vec2 e2)
{
    const Vec2 z = array.elements.at(idx);
    switch (axis) {
    case Axis::x: return k_h(z, x_s, k).k1;
    case Axis::y: return k_h(z, x_s, k).k2;
    case Axis::beam: {
        const WaveVector w = k_h(z, x_s, k);
        return dot({w.k1, w.k2}, e1);
    }
    case Axis::cross: {
        const WaveVector w = k_h(z, x_s, k);
        return dot({w.k1, w.k2}, e2);
    }
    case Axis::r: require_polar(array); return k_h_polar(z, x_s, k, array.origin).k1;
    case Axis::theta: require_polar(array); return k_h_polar(z, x_s, k, array.origin).k2;
    }
    throw InvalidArgument("unknown axis");
}

double k_g_component(const ArrayGeometry& array, std::size_t idx, Vec2 x_test, Vec2 x_s, double k, Axis axis)
{
    if (axis == Axis::beam || axis == Axis::cross) throw InvalidArgument("k_g components are x, y, r or theta");
    if (is_polar_axis(axis)) require_polar(array);
    const Vec2 z = array.elements.at(idx);
    guarded_distance(z, x_s);
    KgKernel kern(select(array, {idx}), x_s, k);
    return kern.component(0, x_test, axis);
}

BandwidthReport bandwidth(const ArrayGeometry& array, Vec2 x_s, double k, Frame frame)
{
    if (array.empty()) throw InvalidArgument("bandwidth: empty array");
    BandwidthReport rep;
    rep.frame = frame;
    std::vector<Axis> axes;
    switch (frame) {
    case Frame::axis_aligned: axes = {Axis::x, Axis::y}; break;
    case Frame::beam_aligned: {
        auto [u, v] = beam_frame(array, x_s);
        rep.e1 = u;
        rep.e2 = v;
        axes = {Axis::beam, Axis::cross};
        break;
    }
    case Frame::polar:
        require_polar(array);
        rep.origin = array.origin;
        axes = {Axis::r, Axis::theta};
        break;
    }
    for (Axis ax : axes) {
        AxisBandwidth b;
        b.axis = ax;
        b.k_min = kInf;
        b.k_max = -kInf;
        for (std::size_t i = 0; i < array.size(); ++i) {
            const double c = k_h_component(array, i, x_s, k, ax, rep.e1, rep.e2);
            if (c < b.k_min) {
                b.k_min = c;
                b.argmin = i;
            }
            if (c > b.k_max) {
                b.k_max = c;
                b.argmax = i;
            }
        }
        b.bandwidth = b.k_max - b.k_min;
        b.resolution = b.bandwidth > 0.0 ? kTwoPi / b.bandwidth : kInf;
        rep.axes.push_back(b);
    }
    return rep;
}

MatchedFrequency max_matched_frequency(const ArrayGeometry& array, Vec2 x_test, Vec2 x_s, double k, Axis axis)
{
    if (array.empty()) throw InvalidArgument("max_matched_frequency: empty array");
    if (axis == Axis::beam || axis == Axis::cross) throw InvalidArgument("K_i axes are x, y, r or theta");
    if (is_polar_axis(axis)) require_polar(array);
    const KgKernel kern(array, x_s, k);
    MatchedFrequency mf;
    for (std::size_t i = 0; i < array.size(); ++i) mf.K = std::max(mf.K, std::abs(kern.component(i, x_test, axis)));
    mf.cae = cae_set(kern, x_test, axis, mf.K);
    return mf;
}

std::size_t RegionMask::count() const
{
    return static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; }));
}

std::vector<std::size_t> boundary_cells(const RegionMask& m)
{
    std::vector<std::size_t> out;
    const GridSpec& g = m.grid;
    for (std::size_t j = 0; j < g.ny; ++j)
        for (std::size_t i = 0; i < g.nx; ++i) {
            const std::size_t c = g.index(i, j);
            if (!m.invalid.empty() && m.invalid[c]) continue;
            const std::uint8_t b = m.bits[c];
            bool edge = false;
            if (i > 0 && m.bits[c - 1] != b) edge = true;
            if (i + 1 < g.nx && m.bits[c + 1] != b) edge = true;
            if (j > 0 && m.bits[c - g.nx] != b) edge = true;
            if (j + 1 < g.ny && m.bits[c + g.nx] != b) edge = true;
            if (edge) out.push_back(c);
        }
    return out;
}

// cells within one cell (8-neighbourhood) of a change of value in m
std::vector<std::uint8_t> boundary_band(const RegionMask& m)
{
    const GridSpec& g = m.grid;
    std::vector<std::uint8_t> band(g.size(), 0);
    for (std::size_t j = 0; j < g.ny; ++j)
        for (std::size_t i = 0; i < g.nx; ++i) {
            const std::size_t c = g.index(i, j);
            for (long dj = -1; dj <= 1 && !band[c]; ++dj)
                for (long di = -1; di <= 1; ++di) {
                    const long ni = static_cast<long>(i) + di, nj = static_cast<long>(j) + dj;
                    if (ni < 0 || nj < 0 || ni >= static_cast<long>(g.nx) || nj >= static_cast<long>(g.ny)) continue;
                    if (m.bits[g.index(static_cast<std::size_t>(ni), static_cast<std::size_t>(nj))] != m.bits[c]) {
                        band[c] = 1;
                        break;
                    }
                }
        }
    return band;
}

std::vector<std::size_t> inner_boundary_cells(const RegionMask& m)
{
    std::vector<std::size_t> out;
    for (std::size_t c : boundary_cells(m))
        if (m.bits[c]) out.push_back(c);
    return out;
}

std::vector<Axis> default_afr_axes(const ArrayGeometry& array)
{
    std::vector<Axis> axes;
    if (array.coord_system == CoordSystem::polar) {
        if (array.spacing(Axis::r) && array.rings > 1) axes.push_back(Axis::r);
        if (array.spacing(Axis::theta)) axes.push_back(Axis::theta);
    } else {
        if (array.spacing(Axis::x)) axes.push_back(Axis::x);
        if (array.spacing(Axis::y)) axes.push_back(Axis::y);
    }
    return axes;
}

double aliasing_limit(const ArrayGeometry& array, Axis axis)
{
    auto d = array.spacing(axis);
    if (!d || !(*d > 0.0)) throw UnsupportedGeometry(std::string("array has no spacing along ") + to_string(axis));
    return kTwoPi / *d;
}

std::size_t AfrDetail::binding_axis(std::size_t cell) const
{
    std::size_t best = 0;
    double ratio = -1.0;
    for (std::size_t a = 0; a < axes.size(); ++a) {
        const double r = K[a][cell] / limits[a];
        if (r > ratio) {
            ratio = r;
            best = a;
        }
    }
    return best;
}

AfrDetail afr_detail(const ArrayGeometry& array, const Scene& scene, std::vector<Axis> axes)
{
    if (array.empty()) throw InvalidArgument("afr: empty array");
    if (!array.uniform) throw UnsupportedGeometry("afr: array is not uniformly spaced");
    scene.validate(array);
    if (axes.empty()) axes = default_afr_axes(array);

    AfrDetail out;
    out.axes = axes;
    bool polar = false, cart = false;
    for (Axis ax : axes) {
        if (ax == Axis::beam || ax == Axis::cross) throw InvalidArgument("afr: axes are x, y, r or theta");
        if (is_polar_axis(ax)) {
            require_polar(array);
            polar = true;
        } else {
            cart = true;
        }
        out.limits.push_back(aliasing_limit(array, ax));
    }
    if (polar && cart) throw InvalidArgument("afr: cannot mix Cartesian and polar axes");

    const GridSpec& g = scene.grid;
    const KgKernel kern(array, scene.source, scene.wavenumber());
    out.K.assign(axes.size(), std::vector<double>(g.size(), 0.0));
    out.mask.grid = g;
    out.mask.bits.assign(g.size(), 0);
    out.mask.invalid.assign(g.size(), 0);

    std::vector<int> slot(axes.size());
    for (std::size_t a = 0; a < axes.size(); ++a) slot[a] = (axes[a] == Axis::x || axes[a] == Axis::r) ? 0 : 1;

    parallel_for(g.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t c = b; c < e; ++c) {
            const Vec2 p = g.center(c);
            double m[2] = {0.0, 0.0};
            bool ok = true;
            for (std::size_t i = 0; i < kern.ants.size() && ok; ++i) {
                double c1 = 0.0, c2 = 0.0;
                ok = kern.eval(i, p, polar, c1, c2);
                m[0] = std::max(m[0], std::abs(c1));
                m[1] = std::max(m[1], std::abs(c2));
            }
            if (!ok) {
                out.mask.invalid[c] = 1;
                for (auto& K : out.K) K[c] = kNaN;
                continue;
            }
            bool inside = true;
            for (std::size_t a = 0; a < axes.size(); ++a) {
                out.K[a][c] = m[slot[a]];
                inside = inside && out.K[a][c] <= out.limits[a];
            }
            out.mask.bits[c] = inside ? 1 : 0;
        }
    });
    out.mask.boundary = marching_squares(g, out.mask.bits);
    return out;
}

RegionMask afr(const ArrayGeometry& array, const Scene& scene, std::vector<Axis> axes)
{
    return afr_detail(array, scene, std::move(axes)).mask;
}

bool in_ncz(const BandwidthReport& bw, Vec2 probe, Vec2 x_s, double k, Axis axis)
{
    const AxisBandwidth& ab = bw.at(axis);
    double c = 0.0;
    if (is_polar_axis(axis)) {
        const WaveVector w = k_h_polar(probe, x_s, k, bw.origin);
        c = axis == Axis::r ? w.k1 : w.k2;
    } else {
        const WaveVector w = k_h(probe, x_s, k);
        const Vec2 v{w.k1, w.k2};
        c = axis == Axis::x ? v.x : axis == Axis::y ? v.y : axis == Axis::beam ? dot(v, bw.e1) : dot(v, bw.e2);
    }
    const double tol = 1e-9 * k;
    return c >= ab.k_min - tol && c <= ab.k_max + tol;
}

RegionMask ncz(const ArrayGeometry& array, Vec2 x_s, double k, Axis axis, const GridSpec& probes, Frame frame)
{
    probes.validate();
    const BandwidthReport bw = bandwidth(array, x_s, k, frame);
    bw.at(axis);
    RegionMask m;
    m.grid = probes;
    m.bits.assign(probes.size(), 0);
    m.invalid.assign(probes.size(), 0);
    parallel_for(probes.size(), [&](std::size_t b, std::size_t e) {
        for (std::size_t c = b; c < e; ++c) {
            const Vec2 p = probes.center(c);
            if (!(distance(p, x_s) > kSingularityGuard)) {
                m.invalid[c] = 1;
                continue;
            }
            m.bits[c] = in_ncz(bw, p, x_s, k, axis) ? 1 : 0;
        }
    });
    m.boundary = marching_squares(probes, m.bits);
    return m;
}

RegionMask ncz_all(const ArrayGeometry& array, Vec2 x_s, double k, const GridSpec& probes, Frame frame)
{
    const BandwidthReport bw = bandwidth(array, x_s, k, frame);
    RegionMask out;
    for (const auto& ab : bw.axes) {
        RegionMask m = ncz(array, x_s, k, ab.axis, probes, frame);
        if (out.bits.empty()) {
            out = std::move(m);
            continue;
        }
        for (std::size_t c = 0; c < out.bits.size(); ++c) {
            out.bits[c] = out.bits[c] && m.bits[c];
            out.invalid[c] = out.invalid[c] || m.invalid[c];
        }
    }
    out.boundary = marching_squares(probes, out.bits);
    return out;
}

bool ResolutionBox::contains(Vec2 p) const
{
    if (polar) {
        const PolarCoord c = to_polar(center - origin), q = to_polar(p - origin);
        const double dth = std::remainder(q.theta - c.theta, kTwoPi);
        return std::abs(q.r - c.r) <= 0.5 * width1 && std::abs(dth) <= 0.5 * width2;
    }
    const Vec2 d = p - center;
    return std::abs(dot(d, e1)) <= 0.5 * width1 && std::abs(dot(d, e2)) <= 0.5 * width2;
}

ResolutionBox resolution_region(const ArrayGeometry& array, Vec2 x_s, double k, Frame frame)
{
    const BandwidthReport bw = bandwidth(array, x_s, k, frame);
    for (const auto& ab : bw.axes)
        if (!(ab.bandwidth > 0.0))
            throw UnboundedRegionError(std::string("zero bandwidth along ") + to_string(ab.axis));
    ResolutionBox box;
    box.center = x_s;
    box.width1 = bw.axes[0].resolution;
    box.width2 = bw.axes[1].resolution;
    if (frame == Frame::polar) {
        const double th = to_polar(x_s - array.origin).theta;
        box.polar = true;
        box.origin = array.origin;
        box.e1 = {std::cos(th), std::sin(th)};
        box.e2 = {-std::sin(th), std::cos(th)};
    } else {
        box.e1 = bw.e1;
        box.e2 = bw.e2;
    }
    return box;
}

Polyline outline(const ResolutionBox& b, std::size_t arc_samples)
{
    Polyline p;
    p.closed = true;
    if (!b.polar) {
        const Vec2 a = b.e1 * (0.5 * b.width1), c = b.e2 * (0.5 * b.width2);
        p.points = {b.center - a - c, b.center + a - c, b.center + a + c, b.center - a + c, b.center - a - c};
        return p;
    }
    const PolarCoord c = to_polar(b.center - b.origin);
    const double r0 = std::max(0.0, c.r - 0.5 * b.width1), r1 = c.r + 0.5 * b.width1;
    const double half = std::min(0.5 * b.width2, kPi);
    const std::size_t m = std::max<std::size_t>(arc_samples, 2);
    auto at = [&](double r, double th) { return b.origin + Vec2{r * std::cos(th), r * std::sin(th)}; };
    for (std::size_t i = 0; i < m; ++i)
        p.points.push_back(at(r1, c.theta - half + 2.0 * half * static_cast<double>(i) / static_cast<double>(m - 1)));
    for (std::size_t i = 0; i < m; ++i)
        p.points.push_back(at(r0, c.theta + half - 2.0 * half * static_cast<double>(i) / static_cast<double>(m - 1)));
    p.points.push_back(p.points.front());
    return p;
}

RegionMask rasterize(const ResolutionBox& box, const GridSpec& grid)
{
    grid.validate();
    RegionMask m;
    m.grid = grid;
    m.bits.assign(grid.size(), 0);
    m.invalid.assign(grid.size(), 0);
    for (std::size_t c = 0; c < grid.size(); ++c) m.bits[c] = box.contains(grid.center(c)) ? 1 : 0;
    m.boundary = marching_squares(grid, m.bits);
    return m;
}

InclusionReport check_inclusion(const ArrayGeometry& sub, const ArrayGeometry& super, const Scene& scene)
{
    if (!is_subset(sub, super)) throw InvalidArgument("check_inclusion: first array is not a subset of the second");
    const auto axes = default_afr_axes(super);
    require_same_spacing(sub, super, axes);
    const RegionMask m1 = afr(sub, scene, axes);
    const RegionMask m2 = afr(super, scene, axes);
    const auto band = boundary_band(m1);
    InclusionReport rep;
    rep.sub_cells = m1.count();
    rep.super_cells = m2.count();
    for (std::size_t c = 0; c < m1.bits.size(); ++c) {
        if (m2.bits[c] && !m1.bits[c]) {
            ++rep.violations;
            if (!band[c]) ++rep.beyond_slack;
        }
    }
    return rep;
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::strictly_larger: return "strictly_larger";
    case Verdict::strictly_smaller: return "strictly_smaller";
    }
    return "?";
}

PropositionReport check_removal(const ArrayGeometry& array1, const ArrayGeometry& array2, const Scene& scene)
{
    return check_change(array2, array1, scene, Change::removal);
}

PropositionReport check_addition(const ArrayGeometry& array1, const ArrayGeometry& array2, const Scene& scene)
{
    return check_change(array1, array2, scene, Change::addition);
}

double safe_spacing(ArrayKind kind, double wavelength, double radius)
{
    if (!(wavelength > 0.0)) throw InvalidArgument("safe_spacing: wavelength must be positive");
    if (kind == ArrayKind::cartesian) return 0.5 * wavelength;
    if (!(radius > 0.0)) throw InvalidArgument("safe_spacing: circular arrays need a positive radius");
    return wavelength / (2.0 * radius);
}

void write_mask_csv(std::ostream& os, const RegionMask& m)
{
    const auto& r = m.grid.region;
    os << "# nfal-mask 1\n";
    os << "# region " << io::fmt(r.xmin) << ' ' << io::fmt(r.xmax) << ' ' << io::fmt(r.ymin) << ' ' << io::fmt(r.ymax)
       << '\n';
    os << "# shape " << m.grid.nx << ' ' << m.grid.ny << '\n';
    os << "cell,x,y,bit,valid\n";
    for (std::size_t c = 0; c < m.bits.size(); ++c) {
        const Vec2 p = m.grid.center(c);
        const bool valid = m.invalid.empty() || !m.invalid[c];
        os << c << ',' << io::fmt(p.x) << ',' << io::fmt(p.y) << ',' << (m.bits[c] ? 1 : 0) << ',' << (valid ? 1 : 0)
           << '\n';
    }
}

void write_polylines_csv(std::ostream& os, const std::vector<Polyline>& lines)
{
    os << "polyline,closed,x,y\n";
    for (std::size_t l = 0; l < lines.size(); ++l)
        for (const auto& p : lines[l].points)
            os << l << ',' << (lines[l].closed ? 1 : 0) << ',' << io::fmt(p.x) << ',' << io::fmt(p.y) << '\n';
}

} // namespace nfal
