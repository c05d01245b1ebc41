// SPDX-License-Identifier: Apache-2.0
#include "nfal/io.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace nfal::io {

std::string fmt(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0"; // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::uint16_t to_u16(double v, double lo, double hi)
{
    if (std::isnan(v) || !(hi > lo)) return 0;
    const double t = std::clamp((v - lo) / (hi - lo), 0.0, 1.0);
    return static_cast<std::uint16_t>(std::lround(t * 65535.0));
}

void write_pgm16(std::ostream& os, std::size_t width, std::size_t height, const std::vector<std::uint16_t>& pixels)
{
    if (pixels.size() != width * height) throw InvalidArgument("write_pgm16: pixel count mismatch");
    os << "P5\n" << width << ' ' << height << "\n65535\n";
    std::vector<char> buf(pixels.size() * 2);
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        buf[2 * i] = static_cast<char>(pixels[i] >> 8);
        buf[2 * i + 1] = static_cast<char>(pixels[i] & 0xff);
    }
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

} // namespace nfal::io
