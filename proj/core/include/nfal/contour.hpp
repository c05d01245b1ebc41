// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nfal/types.hpp"

#include <cstdint>
#include <vector>

namespace nfal {

struct Polyline {
    std::vector<Vec2> points;
    bool closed = false;
};

// Marching squares on a boolean field sampled at cell centres. The contour
// passes through edge midpoints between differing samples; saddles keep the
// true samples connected. Contours touching the grid edge are open.
std::vector<Polyline> marching_squares(const GridSpec& grid, const std::vector<std::uint8_t>& bits);

} // namespace nfal
