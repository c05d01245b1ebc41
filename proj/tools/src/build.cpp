// SPDX-License-Identifier: Apache-2.0
#include "nfal_cli/scenario.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>

namespace nfal::cli {

namespace {

double radians(double d) { return d * kPi / 180.0; }

} // namespace

ArrayGeometry build_array(const ArraySpec& a, const std::map<std::string, ArrayGeometry>& built)
{
    auto lookup = [&](const std::string& name) -> const ArrayGeometry& {
        const auto it = built.find(name);
        if (it == built.end()) throw InvalidArgument("unknown array '" + name + "'");
        return it->second;
    };
    if (a.builder == "linear") {
        const double D = a.spacing > 0.0 ? a.spacing * static_cast<double>(a.n - 1) : a.aperture;
        return build_linear(a.n, D, a.center, a.axis);
    }
    if (a.builder == "rectangular") {
        const double Dx = a.spacing > 0.0 ? a.spacing * static_cast<double>(a.nx - 1) : a.aperture;
        const double Dy = a.spacing_y > 0.0 ? a.spacing_y * static_cast<double>(a.ny - 1) : a.aperture_y;
        return build_rectangular(a.nx, a.ny, Dx, Dy, a.center);
    }
    if (a.builder == "circular" || a.builder == "concentric") {
        const bool full = a.arc_deg >= 360.0;
        const double arc = full ? kTwoPi : radians(a.arc_deg);
        // partial arcs default to facing -y
        const double start = a.start_deg ? radians(*a.start_deg) : (full ? 0.0 : -kPi / 2 - arc / 2);
        if (a.builder == "circular") return build_circular(a.n, arc, a.radius, a.center, start);
        return build_concentric(a.n, arc, a.radii, a.center, start);
    }
    if (a.builder == "points") return from_points(a.points);
    if (a.builder == "subset") {
        const auto& p = lookup(a.parent);
        for (auto i : a.indices)
            if (i >= p.size()) throw InvalidArgument("subset index " + std::to_string(i) + " out of range for '" + a.parent + "'");
        return select(p, a.indices);
    }
    if (a.builder == "union") {
        ArrayGeometry acc = lookup(a.members.front());
        for (std::size_t i = 1; i < a.members.size(); ++i) acc = merge(acc, lookup(a.members[i]));
        return acc;
    }
    throw InvalidArgument("unknown builder '" + a.builder + "'");
}

std::map<std::string, ArrayGeometry> build_arrays(const Scenario& s)
{
    std::map<std::string, ArrayGeometry> out;
    for (const auto& [name, spec] : s.arrays) {
        try {
            out.emplace(name, build_array(spec, out));
        } catch (const std::exception& e) {
            throw InvalidArgument("array '" + name + "': " + e.what());
        }
    }
    return out;
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

fs::path scenario_directory()
{
    if (const char* env = std::getenv("NFAL_SCENARIO_DIR"); env && *env) return env;
    // <prefix>/bin/nfal next to <prefix>/share/nfal/scenarios, wherever the prefix was moved
    std::error_code ec;
    const fs::path exe = fs::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        const fs::path beside = exe.parent_path().parent_path() / "share" / "nfal" / "scenarios";
        if (fs::is_directory(beside, ec)) return beside;
    }
    const fs::path source = NFAL_SOURCE_SCENARIO_DIR;
    if (fs::is_directory(source)) return source;
    return NFAL_INSTALLED_SCENARIO_DIR;
}

std::vector<fs::path> bundled_scenarios()
{
    std::vector<fs::path> out;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(scenario_directory(), ec))
        if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<fs::path> find_bundled(const std::string& name)
{
    const fs::path p = scenario_directory() / (name + ".json");
    if (fs::is_regular_file(p)) return p;
    return std::nullopt;
}

} // namespace nfal::cli
