// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nfal {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kWavenumber = kTwoPi;    // k in units of 1/λ
inline constexpr double kSingularityGuard = 1e-6; // λ
inline constexpr double kCoincidenceTol = 1e-9;   // λ

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr bool operator==(const Vec2&) const = default;
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
inline constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::sqrt(v.x * v.x + v.y * v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

// axis-aligned rectangle [xmin, xmax] x [ymin, ymax]
struct Rect {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    bool contains(Vec2 p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
    bool operator==(const Rect&) const = default;
};

// Cell-centred sampling of a rectangle; index = j * nx + i (rows along y).
struct GridSpec {
    Rect region;
    std::size_t nx = 0;
    std::size_t ny = 0;

    double dx() const { return region.width() / static_cast<double>(nx); }
    double dy() const { return region.height() / static_cast<double>(ny); }
    std::size_t size() const { return nx * ny; }
    std::size_t index(std::size_t i, std::size_t j) const { return j * nx + i; }
    double x(std::size_t i) const { return region.xmin + (static_cast<double>(i) + 0.5) * dx(); }
    double y(std::size_t j) const { return region.ymin + (static_cast<double>(j) + 0.5) * dy(); }
    Vec2 center(std::size_t i, std::size_t j) const { return {x(i), y(j)}; }
    Vec2 center(std::size_t idx) const { return center(idx % nx, idx / nx); }
    double cell_area() const { return dx() * dy(); }
    bool operator==(const GridSpec&) const = default;

    void validate() const;
};

enum class Axis { x, y, r, theta, beam, cross };

const char* to_string(Axis a);

// error taxonomy
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};
struct UnsupportedGeometry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BorderPeakError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnboundedRegionError : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegenerateExpansionError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace nfal
