// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nfal/contour.hpp"
#include "nfal/field.hpp"
#include "nfal/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace nfal {

enum class Frame {
    axis_aligned, // x, y
    beam_aligned, // beam = centroid -> source, cross = beam rotated +90°
    polar         // r, θ about the array origin (polar-tagged arrays)
};

struct AxisBandwidth {
    Axis axis = Axis::x;
    double k_min = 0.0;
    double k_max = 0.0;
    double bandwidth = 0.0;  // k_max - k_min
    double resolution = 0.0; // 2π / bandwidth, +inf when bandwidth is 0
    std::size_t argmin = 0;  // antenna index attaining k_min
    std::size_t argmax = 0;
};

struct BandwidthReport {
    Frame frame = Frame::axis_aligned;
    Vec2 e1{1.0, 0.0}; // first frame axis (Cartesian frames)
    Vec2 e2{0.0, 1.0};
    Vec2 origin;       // pole (polar frame)
    std::vector<AxisBandwidth> axes;

    const AxisBandwidth& at(Axis a) const;
};

BandwidthReport bandwidth(const ArrayGeometry& array, Vec2 x_s, double k, Frame frame = Frame::axis_aligned);

// unit vectors (beam, cross) used by the beam-aligned frame
std::pair<Vec2, Vec2> beam_frame(const ArrayGeometry& array, Vec2 x_s);

// one component of k_h or k_g in the given axis (x, y, r, theta, or beam/cross with basis e1/e2)
double k_h_component(const ArrayGeometry& array, std::size_t idx, Vec2 x_s, double k, Axis axis, Vec2 e1 = {1, 0},
                     Vec2 e2 = {0, 1});
double k_g_component(const ArrayGeometry& array, std::size_t idx, Vec2 x_test, Vec2 x_s, double k, Axis axis);

inline constexpr double kCaeTieTol = 1e-9; // times k

struct MatchedFrequency {
    double K = 0.0;
    std::vector<std::size_t> cae; // antennas within kCaeTieTol * k of K
};

// K_i = max over antennas of |k_g,i|
MatchedFrequency max_matched_frequency(const ArrayGeometry& array, Vec2 x_test, Vec2 x_s, double k, Axis axis);

struct RegionMask {
    GridSpec grid;
    std::vector<std::uint8_t> bits;
    std::vector<std::uint8_t> invalid; // cells where the test was not computable
    std::vector<Polyline> boundary;

    std::size_t count() const;
    double area() const { return static_cast<double>(count()) * grid.cell_area(); }
    bool at(std::size_t i, std::size_t j) const { return bits[grid.index(i, j)] != 0; }
};

// Cells with a 4-neighbour of different value (both sides of each transition).
std::vector<std::size_t> boundary_cells(const RegionMask& m);
// Only the true side.
std::vector<std::size_t> inner_boundary_cells(const RegionMask& m);
// Per-cell flag: some 8-neighbour differs in value. Used as the one-cell slack band.
std::vector<std::uint8_t> boundary_band(const RegionMask& m);

// Aliasing axes of an array: Cartesian axes with a recorded spacing; θ for
// polar arrays plus r when there is more than one ring.
std::vector<Axis> default_afr_axes(const ArrayGeometry& array);

// 2π / Δ_axis
double aliasing_limit(const ArrayGeometry& array, Axis axis);

struct AfrDetail {
    RegionMask mask;
    std::vector<Axis> axes;
    std::vector<std::vector<double>> K; // per axis, per cell (NaN when invalid)
    std::vector<double> limits;         // per axis

    // index of the axis with the largest K / limit at a cell
    std::size_t binding_axis(std::size_t cell) const;
};

AfrDetail afr_detail(const ArrayGeometry& array, const Scene& scene, std::vector<Axis> axes = {});
RegionMask afr(const ArrayGeometry& array, const Scene& scene, std::vector<Axis> axes = {});

// Probe is non-contributive along `axis` iff its k_h component lies in
// [k_min, k_max] of the array (closed, tolerance 1e-9 k).
RegionMask ncz(const ArrayGeometry& array, Vec2 x_s, double k, Axis axis, const GridSpec& probes,
               Frame frame = Frame::axis_aligned);
RegionMask ncz_all(const ArrayGeometry& array, Vec2 x_s, double k, const GridSpec& probes,
                   Frame frame = Frame::axis_aligned);
bool in_ncz(const BandwidthReport& bw, Vec2 probe, Vec2 x_s, double k, Axis axis);

// Cartesian frames: a rectangle along e1, e2. Polar frame: the annular sector
// |r - r_s| <= width1 / 2, |θ - θ_s| <= width2 / 2 about `origin` (width2 in
// radians); e1, e2 are then the local radial and tangential directions at x_s.
struct ResolutionBox {
    Vec2 center;
    Vec2 e1, e2;
    double width1 = 0.0; // 2π / B_1
    double width2 = 0.0;
    bool polar = false;
    Vec2 origin;

    bool contains(Vec2 p) const;
};

ResolutionBox resolution_region(const ArrayGeometry& array, Vec2 x_s, double k, Frame frame = Frame::beam_aligned);
RegionMask rasterize(const ResolutionBox& box, const GridSpec& grid);
// Closed outline; polar sectors use `arc_samples` points per arc.
Polyline outline(const ResolutionBox& box, std::size_t arc_samples = 64);

struct InclusionReport {
    std::size_t violations = 0;        // cells in AFR(super) but not in AFR(sub)
    std::size_t beyond_slack = 0;      // violations farther than one cell from sub's boundary
    std::size_t sub_cells = 0;
    std::size_t super_cells = 0;
    bool holds() const { return beyond_slack == 0; }
};

InclusionReport check_inclusion(const ArrayGeometry& sub, const ArrayGeometry& super, const Scene& scene);

enum class Verdict { equal, strictly_larger, strictly_smaller };
const char* to_string(Verdict v);

struct PropositionReport {
    Verdict predicted = Verdict::equal;  // from CAE sets on boundary cells
    Verdict observed = Verdict::equal;   // from the two computed masks
    bool agrees = false;                 // equal verdicts, or disagreement confined to one cell of the boundary
    std::size_t boundary_cells = 0;
    std::size_t triggering_cells = 0;    // boundary cells whose prediction is "changes"
    std::size_t changed_cells = 0;
    double max_shift_cells = 0.0;        // predicted boundary displacement at triggering cells, in cells
    bool changes_near_boundary = true;   // every changed cell within one cell of the original boundary
};

// array2 ⊆ array1 (antennas removed)
PropositionReport check_removal(const ArrayGeometry& array1, const ArrayGeometry& array2, const Scene& scene);
// array1 ⊆ array2 (antennas added)
PropositionReport check_addition(const ArrayGeometry& array1, const ArrayGeometry& array2, const Scene& scene);

enum class ArrayKind { cartesian, circular };

// λ/2 (Cartesian), λ/(2R) radians (circular)
double safe_spacing(ArrayKind kind, double wavelength, double radius = 0.0);

// CSV exports
void write_mask_csv(std::ostream& os, const RegionMask& m);
void write_polylines_csv(std::ostream& os, const std::vector<Polyline>& lines);

} // namespace nfal
