// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nfal/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nfal::io {

// canonical text form: 9 significant digits, "nan"/"inf"/"-inf" spelled out
std::string fmt(double v);

// Writes a binary 16-bit PGM (big-endian samples). `rows` are emitted in the
// given order; pixels.size() must equal width * height.
void write_pgm16(std::ostream& os, std::size_t width, std::size_t height, const std::vector<std::uint16_t>& pixels);

// maps v in [lo, hi] to [0, 65535]; NaN -> 0
std::uint16_t to_u16(double v, double lo, double hi);

} // namespace nfal::io
