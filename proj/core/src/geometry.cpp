// SPDX-License-Identifier: Apache-2.0
#include "nfal/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nfal {

namespace {

bool is_full_circle(double arc) { return std::abs(arc - kTwoPi) <= 1e-12; }

// position i of n evenly spread over [-0.5, 0.5]
double unit_offset(std::size_t i, std::size_t n)
{
    if (n == 1) return 0.0;
    return static_cast<double>(i) / static_cast<double>(n - 1) - 0.5;
}

std::vector<std::size_t> order_by_x(const std::vector<Vec2>& pts)
{
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    });
    return idx;
}

void require_finite(Vec2 p, const char* what)
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw InvalidArgument(std::string(what) + " must be finite");
}

} // namespace

std::optional<double> ArrayGeometry::spacing(Axis a) const
{
    auto it = spacings.find(a);
    if (it == spacings.end()) return std::nullopt;
    return it->second;
}

Vec2 ArrayGeometry::centroid() const
{
    if (elements.empty()) throw InvalidArgument("centroid of an empty array");
    Vec2 c;
    for (const auto& e : elements) c = c + e;
    return c / static_cast<double>(elements.size());
}

void check_distinct(const std::vector<Vec2>& points)
{
    auto idx = order_by_x(points);
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const Vec2 p = points[idx[a]];
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            const Vec2 q = points[idx[b]];
            if (q.x - p.x > kCoincidenceTol) break;
            if (distance(p, q) <= kCoincidenceTol)
                throw InvalidArgument("antennas " + std::to_string(idx[a]) + " and " +
                                      std::to_string(idx[b]) + " coincide");
        }
    }
}

ArrayGeometry from_points(std::vector<Vec2> points)
{
    if (points.empty()) throw InvalidArgument("array needs at least one element");
    for (const auto& p : points) require_finite(p, "antenna position");
    check_distinct(points);
    ArrayGeometry g;
    g.elements = std::move(points);
    g.uniform = false;
    return g;
}

ArrayGeometry build_linear(std::size_t n, double aperture, Vec2 center, Vec2 axis)
{
    if (n == 0) throw InvalidArgument("build_linear: n must be at least 1");
    if (!(aperture >= 0.0) || !std::isfinite(aperture))
        throw InvalidArgument("build_linear: aperture must be finite and non-negative");
    if (aperture == 0.0 && n > 1) throw InvalidArgument("build_linear: zero aperture requires n = 1");
    require_finite(center, "center");
    const double len = norm(axis);
    if (!(len > 0.0)) throw InvalidArgument("build_linear: axis must be non-zero");
    const Vec2 u = axis / len;

    ArrayGeometry g;
    g.uniform = true;
    g.elements.reserve(n);
    for (std::size_t i = 0; i < n; ++i) g.elements.push_back(center + u * (aperture * unit_offset(i, n)));

    // oblique lines carry no per-axis spacing; the aliasing tests are axis-wise
    const bool along_x = std::abs(u.y) < 1e-15;
    const bool along_y = std::abs(u.x) < 1e-15;
    const Axis a = along_x ? Axis::x : Axis::y;
    if (along_x || along_y) {
        g.apertures[a] = aperture;
        if (n > 1) g.spacings[a] = aperture / static_cast<double>(n - 1);
    } else {
        g.uniform = false;
    }
    return g;
}

ArrayGeometry build_rectangular(std::size_t nx, std::size_t ny, double dx_total, double dy_total, Vec2 center)
{
    if (nx == 0 || ny == 0) throw InvalidArgument("build_rectangular: counts must be at least 1");
    if (!(dx_total >= 0.0) || !(dy_total >= 0.0))
        throw InvalidArgument("build_rectangular: extents must be non-negative");
    if ((nx > 1 && dx_total == 0.0) || (ny > 1 && dy_total == 0.0))
        throw InvalidArgument("build_rectangular: zero extent with more than one element");
    require_finite(center, "center");

    ArrayGeometry g;
    g.uniform = true;
    g.elements.reserve(nx * ny);
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i)
            g.elements.push_back({center.x + dx_total * unit_offset(i, nx), center.y + dy_total * unit_offset(j, ny)});

    if (nx > 1) {
        g.spacings[Axis::x] = dx_total / static_cast<double>(nx - 1);
        g.apertures[Axis::x] = dx_total;
    }
    if (ny > 1) {
        g.spacings[Axis::y] = dy_total / static_cast<double>(ny - 1);
        g.apertures[Axis::y] = dy_total;
    }
    return g;
}

ArrayGeometry build_circular(std::size_t n_theta, double arc, double radius, Vec2 center, double start_angle)
{
    return build_concentric(n_theta, arc, {radius}, center, start_angle);
}

ArrayGeometry build_concentric(std::size_t n_theta, double arc, const std::vector<double>& radii, Vec2 center,
                               double start_angle)
{
    if (n_theta == 0) throw InvalidArgument("circular array: n_theta must be at least 1");
    if (!(arc > 0.0) || arc > kTwoPi + 1e-12) throw InvalidArgument("circular array: arc must lie in (0, 2π]");
    if (radii.empty()) throw InvalidArgument("concentric array: radii must be nonempty");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || !std::isfinite(radii[i]))
            throw InvalidArgument("circular array: radius must be positive");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw InvalidArgument("concentric array: radii must be strictly increasing");
    }
    double dr = 0.0;
    if (radii.size() >= 2) {
        dr = (radii.back() - radii.front()) / static_cast<double>(radii.size() - 1);
        for (std::size_t i = 1; i < radii.size(); ++i)
            if (std::abs((radii[i] - radii[i - 1]) - dr) > 1e-9)
                throw InvalidArgument("concentric array: radial steps must be uniform");
    }
    require_finite(center, "center");

    const bool full = is_full_circle(arc);
    double dtheta = 0.0;
    if (n_theta > 1) dtheta = full ? kTwoPi / static_cast<double>(n_theta) : arc / static_cast<double>(n_theta - 1);

    ArrayGeometry g;
    g.coord_system = CoordSystem::polar;
    g.uniform = true;
    g.origin = center;
    g.rings = radii.size();
    g.per_ring = n_theta;
    g.elements.reserve(n_theta * radii.size());
    g.polar.reserve(n_theta * radii.size());
    for (double r : radii) {
        for (std::size_t j = 0; j < n_theta; ++j) {
            const double th = start_angle + static_cast<double>(j) * dtheta;
            g.polar.push_back({r, th});
            g.elements.push_back(center + Vec2{r * std::cos(th), r * std::sin(th)});
        }
    }
    if (n_theta > 1) g.spacings[Axis::theta] = dtheta;
    g.apertures[Axis::theta] = n_theta > 1 ? arc : 0.0;
    if (radii.size() >= 2) {
        g.spacings[Axis::r] = dr;
        g.apertures[Axis::r] = radii.back() - radii.front();
    }
    return g;
}

ArrayGeometry merge(const ArrayGeometry& a, const ArrayGeometry& b)
{
    ArrayGeometry g;
    g.elements = a.elements;
    g.elements.insert(g.elements.end(), b.elements.begin(), b.elements.end());
    check_distinct(g.elements);
    const bool same_frame = a.coord_system == b.coord_system &&
                            (a.coord_system == CoordSystem::cartesian || a.origin == b.origin);
    if (same_frame && a.spacings.size() == b.spacings.size()) {
        bool same = true;
        for (const auto& [axis, d] : a.spacings) {
            auto o = b.spacing(axis);
            if (!o || std::abs(*o - d) > 1e-9) same = false;
        }
        if (same) {
            g.coord_system = a.coord_system;
            g.spacings = a.spacings;
            g.uniform = a.uniform && b.uniform;
            g.origin = a.origin;
            if (g.coord_system == CoordSystem::polar) {
                g.polar = a.polar;
                g.polar.insert(g.polar.end(), b.polar.begin(), b.polar.end());
                g.rings = std::max(a.rings, b.rings);
            }
        }
    }
    return g;
}

ArrayGeometry select(const ArrayGeometry& a, const std::vector<std::size_t>& indices)
{
    if (indices.empty()) throw InvalidArgument("select: empty index list");
    ArrayGeometry g = a;
    g.elements.clear();
    g.polar.clear();
    for (std::size_t i : indices) {
        if (i >= a.size()) throw InvalidArgument("select: index out of range");
        g.elements.push_back(a.elements[i]);
        if (!a.polar.empty()) g.polar.push_back(a.polar[i]);
    }
    check_distinct(g.elements);
    return g;
}

PolarCoord to_polar(Vec2 p)
{
    const double r = norm(p);
    if (r == 0.0) return {0.0, 0.0};
    return {r, std::atan2(p.y, p.x)};
}

Vec2 from_polar(PolarCoord p) { return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)}; }

bool is_subset(const ArrayGeometry& sub, const ArrayGeometry& super, double tol)
{
    auto idx = order_by_x(super.elements);
    std::vector<double> xs(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) xs[i] = super.elements[idx[i]].x;
    for (const auto& p : sub.elements) {
        auto it = std::lower_bound(xs.begin(), xs.end(), p.x - tol);
        bool found = false;
        for (; it != xs.end() && *it <= p.x + tol; ++it) {
            if (distance(super.elements[idx[static_cast<std::size_t>(it - xs.begin())]], p) <= tol) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

void Scene::validate(const ArrayGeometry& array) const
{
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) throw InvalidArgument("wavelength must be positive");
    grid.validate();
    require_finite(source, "source");
    for (const auto& z : array.elements)
        if (distance(z, source) <= kSingularityGuard)
            throw SingularityError("source coincides with an antenna");
}

} // namespace nfal
