// SPDX-License-Identifier: Apache-2.0
// Scenario files: parsing, execution and sweeps behind the nfal command.
#pragma once

#include "nfal/nfal.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nfal::cli {

namespace fs = std::filesystem;

// Malformed scenario: syntax error or schema violation. line is 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& field, std::size_t line, const std::string& what);
    const std::string& field() const { return field_; }
    std::size_t line() const { return line_; }

private:
    std::string field_;
    std::size_t line_;
};

struct ArraySpec {
    std::string builder; // linear | rectangular | circular | concentric | points | subset | union
    std::size_t n = 0, nx = 0, ny = 0;
    double aperture = 0.0, aperture_y = 0.0;
    double spacing = 0.0, spacing_y = 0.0; // alternative to aperture
    Vec2 center;
    Vec2 axis{1.0, 0.0};
    double arc_deg = 0.0, radius = 0.0;
    std::optional<double> start_deg;
    std::vector<double> radii;
    std::vector<Vec2> points;
    std::string parent;
    std::vector<std::size_t> indices;
    std::vector<std::string> members;
};

struct SceneSpec {
    double wavelength = 1.0;
    Vec2 source;
    Rect region;
    std::size_t nx = 0, ny = 0;

    Scene scene() const { return {wavelength, source, {region, nx, ny}}; }
};

struct OutputSpec {
    std::string kind;  // af | afr | overlay | resolution | ncz | cae | spectrum-g | spectrum-h | loci |
                       // check-prop1 | check-prop2 | check-prop3 | safe-spacing | sweep
    std::string stem;  // artifact file stem
    std::string array;
    std::string other; // second array of the proposition checks
    std::string scene = "scene";
    std::optional<Vec2> test;
    std::optional<Axis> axis;
    Frame frame = Frame::beam_aligned;
    std::optional<Verdict> expect;
    // spectrum
    SpectrumOptions spectrum;
    std::optional<bool> polar;
    // loci
    std::optional<SamplingCurve> curve;
    std::size_t samples = 4096;
    bool asymptotes = false;
};

struct SweepSpec {
    std::string array;
    std::string parameter; // spacing | aperture | n | source_distance | radius | arc_deg
    std::vector<double> values;
    Frame frame = Frame::axis_aligned;
    std::map<std::string, std::string> expect; // column -> trend
};

struct Scenario {
    std::string name;
    std::string description;
    std::string output_dir;
    std::vector<std::pair<std::string, ArraySpec>> arrays; // declaration order
    std::map<std::string, SceneSpec> scenes;
    std::vector<OutputSpec> outputs;
    std::optional<SweepSpec> sweep;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const fs::path& file);

// Builds every array of the scenario; later arrays may reference earlier ones.
std::map<std::string, ArrayGeometry> build_arrays(const Scenario& s);
ArrayGeometry build_array(const ArraySpec& spec, const std::map<std::string, ArrayGeometry>& built);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ManifestEntry {
    std::string path; // relative to the output directory
    std::string sha256;
    bool operator==(const ManifestEntry&) const = default;
};

struct RunOptions {
    std::optional<fs::path> output_root; // else NFAL_OUTPUT_ROOT, else ./nfal-out
    unsigned workers = 0;                // 0 keeps the current setting
    bool sweep_only = false;
};

struct RunOutcome {
    int exit_code = 2; // 0 all checks pass, 1 a check failed, 2 invalid input or runtime error
    fs::path output_dir;
    std::vector<ManifestEntry> manifest;
    std::vector<CheckResult> checks;
    std::string message;
};

RunOutcome run_scenario(const Scenario& s, const RunOptions& opt = {});
// Resolves bundled names, parses, runs. Never throws.
RunOutcome run_file(const fs::path& file, const RunOptions& opt = {});

// Trend of a series: constant, increasing, decreasing, non-increasing,
// non-decreasing or mixed. Steps within rel_tol are treated as flat.
struct Trend {
    std::string label;
    std::size_t plateaus = 0; // flat steps
};
Trend classify(const std::vector<double>& v, double rel_tol);
// "non-increasing", "increasing+plateau", ...
bool trend_satisfies(const Trend& t, const std::string& expected);

fs::path scenario_directory();
std::vector<fs::path> bundled_scenarios();
std::optional<fs::path> find_bundled(const std::string& name);

std::string sha256_hex(const std::string& bytes);

} // namespace nfal::cli
