// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nfal/types.hpp"

#include <map>
#include <optional>
#include <vector>

namespace nfal {

enum class CoordSystem { cartesian, polar };

struct PolarCoord {
    double r = 0.0;
    double theta = 0.0;
};

// Antenna set with the per-axis sampling metadata needed by the aliasing tests.
// Lengths in λ, angles in radians.
struct ArrayGeometry {
    std::vector<Vec2> elements;
    CoordSystem coord_system = CoordSystem::cartesian;
    std::map<Axis, double> spacings;  // Δx, Δy | Δr, Δθ
    std::map<Axis, double> apertures; // extents per axis
    bool uniform = false;             // false for raw point sets

    // polar-tagged arrays only
    Vec2 origin;                      // pole of the polar frame
    std::vector<PolarCoord> polar;    // per element, θ unwrapped along the arc
    std::size_t rings = 0;
    std::size_t per_ring = 0;

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
    std::optional<double> spacing(Axis a) const;
    Vec2 centroid() const;
};

// Raw point set. Accepted everywhere except by AFR operations.
ArrayGeometry from_points(std::vector<Vec2> points);

ArrayGeometry build_linear(std::size_t n, double aperture, Vec2 center = {}, Vec2 axis = {1.0, 0.0});

// Row-major lattice, x fastest.
ArrayGeometry build_rectangular(std::size_t nx, std::size_t ny, double dx_total, double dy_total, Vec2 center = {});

// Full circles (arc = 2π) use Δθ = 2π/n; partial arcs include both endpoints.
ArrayGeometry build_circular(std::size_t n_theta, double arc, double radius, Vec2 center = {},
                             double start_angle = 0.0);

ArrayGeometry build_concentric(std::size_t n_theta, double arc, const std::vector<double>& radii,
                               Vec2 center = {}, double start_angle = 0.0);

// Elements of both arrays concatenated; metadata kept only when compatible.
ArrayGeometry merge(const ArrayGeometry& a, const ArrayGeometry& b);

// Subset by element index; keeps the parent's spacing metadata.
ArrayGeometry select(const ArrayGeometry& a, const std::vector<std::size_t>& indices);

PolarCoord to_polar(Vec2 p);
Vec2 from_polar(PolarCoord p);

// Throws InvalidArgument when two elements coincide within kCoincidenceTol.
void check_distinct(const std::vector<Vec2>& points);

// True when every element of sub matches an element of super within tol.
bool is_subset(const ArrayGeometry& sub, const ArrayGeometry& super, double tol = 1e-9);

struct Scene {
    double wavelength = 1.0;
    Vec2 source;
    GridSpec grid;

    double wavenumber() const { return kTwoPi / wavelength; }
    // throws on non-positive wavelength, empty region or source on an antenna
    void validate(const ArrayGeometry& array) const;
};

} // namespace nfal
