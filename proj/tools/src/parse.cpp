// SPDX-License-Identifier: Apache-2.0
#include "nfal_cli/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace nfal::cli {

using json = nlohmann::json;

ParseError::ParseError(const std::string& field, std::size_t line, const std::string& what)
    : std::runtime_error(what), field_(field), line_(line)
{
}

namespace {

double radians(double d) { return d * kPi / 180.0; }

// Start of element n of the list opening at or after pos, or npos.
std::size_t list_element(const std::string& text, std::size_t pos, std::size_t n)
{
    pos = text.find('[', pos);
    if (pos == std::string::npos) return pos;
    int depth = 0;
    bool in_string = false, expect = true;
    std::size_t index = 0;
    for (std::size_t i = pos; i < text.size(); ++i) {
        const char c = text[i];
        if (in_string) {
            if (c == '\\') ++i;
            else if (c == '"') in_string = false;
            continue;
        }
        if (depth == 1 && expect && !std::isspace(static_cast<unsigned char>(c)) && c != ']') {
            if (index == n) return i;
            expect = false;
        }
        if (c == '"') in_string = true;
        else if (c == '[' || c == '{') ++depth;
        else if (c == ']' || c == '}') {
            if (--depth == 0) return std::string::npos;
        } else if (c == ',' && depth == 1) {
            ++index;
            expect = true;
        }
    }
    return std::string::npos;
}

// Best-effort line of a JSON pointer: locate each object key and list element in turn.
std::size_t line_of(const std::string& text, const std::string& pointer)
{
    std::size_t pos = 0;
    bool found = false;
    std::istringstream tokens(pointer);
    std::string tok;
    while (std::getline(tokens, tok, '/')) {
        if (tok.empty()) continue;
        std::size_t at;
        if (std::all_of(tok.begin(), tok.end(), ::isdigit))
            at = list_element(text, pos, std::stoul(tok));
        else
            at = text.find('"' + tok + '"', pos);
        if (at == std::string::npos) break;
        pos = at + 1;
        found = true;
    }
    if (!found) return 0;
    return static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n')) + 1;
}

class Reader {
public:
    explicit Reader(const std::string& text) : text_(text) {}

    [[noreturn]] void fail(const std::string& path, const std::string& msg) const
    {
        const std::size_t line = line_of(text_, path);
        std::string where = path.empty() ? "/" : path;
        if (line) where += " (line " + std::to_string(line) + ")";
        throw ParseError(path, line, where + ": " + msg);
    }

    void only_keys(const json& j, const std::string& path, std::set<std::string> allowed) const
    {
        if (!j.is_object()) fail(path, "expected an object");
        for (auto it = j.begin(); it != j.end(); ++it)
            if (!allowed.count(it.key())) fail(path + "/" + it.key(), "unknown field");
    }

    const json& req(const json& j, const std::string& key, const std::string& path) const
    {
        if (!j.contains(key)) fail(path + "/" + key, "missing required field");
        return j.at(key);
    }

    double number(const json& j, const std::string& path) const
    {
        if (!j.is_number()) fail(path, "expected a number");
        const double v = j.get<double>();
        if (!std::isfinite(v)) fail(path, "expected a finite number");
        return v;
    }

    double positive(const json& j, const std::string& path) const
    {
        const double v = number(j, path);
        if (!(v > 0.0)) fail(path, "expected a positive number");
        return v;
    }

    std::size_t count(const json& j, const std::string& path, std::size_t min = 1) const
    {
        if (!j.is_number_integer() && !j.is_number_unsigned()) fail(path, "expected an integer");
        const long long v = j.get<long long>();
        if (v < static_cast<long long>(min)) fail(path, "expected an integer >= " + std::to_string(min));
        return static_cast<std::size_t>(v);
    }

    std::string string(const json& j, const std::string& path) const
    {
        if (!j.is_string()) fail(path, "expected a string");
        return j.get<std::string>();
    }

    Vec2 vec2(const json& j, const std::string& path) const
    {
        if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
        return {number(j[0], path + "/0"), number(j[1], path + "/1")};
    }

    bool boolean(const json& j, const std::string& path) const
    {
        if (!j.is_boolean()) fail(path, "expected true or false");
        return j.get<bool>();
    }

private:
    const std::string& text_;
};

Axis parse_axis(const Reader& r, const json& j, const std::string& path)
{
    static const std::map<std::string, Axis> names{{"x", Axis::x},         {"y", Axis::y},
                                                   {"r", Axis::r},         {"theta", Axis::theta},
                                                   {"beam", Axis::beam},   {"cross", Axis::cross}};
    const auto s = r.string(j, path);
    const auto it = names.find(s);
    if (it == names.end()) r.fail(path, "unknown axis '" + s + "'");
    return it->second;
}

Frame parse_frame(const Reader& r, const json& j, const std::string& path)
{
    const auto s = r.string(j, path);
    if (s == "axis_aligned") return Frame::axis_aligned;
    if (s == "beam_aligned") return Frame::beam_aligned;
    if (s == "polar") return Frame::polar;
    r.fail(path, "unknown frame '" + s + "' (axis_aligned | beam_aligned | polar)");
}

ArraySpec parse_array(const Reader& r, const json& j, const std::string& path,
                      const std::vector<std::pair<std::string, ArraySpec>>& earlier)
{
    ArraySpec a;
    a.builder = r.string(r.req(j, "builder", path), path + "/builder");
    auto known = [&](const std::string& name, const std::string& p) {
        for (const auto& e : earlier)
            if (e.first == name) return;
        r.fail(p, "unknown array '" + name + "' (arrays may only reference earlier arrays)");
    };
    const auto center = [&] {
        if (j.contains("center")) a.center = r.vec2(j["center"], path + "/center");
    };
    if (a.builder == "linear") {
        r.only_keys(j, path, {"builder", "n", "aperture", "spacing", "center", "axis"});
        a.n = r.count(r.req(j, "n", path), path + "/n", 2);
        if (j.contains("aperture") == j.contains("spacing")) r.fail(path, "give exactly one of aperture, spacing");
        if (j.contains("aperture")) a.aperture = r.positive(j["aperture"], path + "/aperture");
        if (j.contains("spacing")) a.spacing = r.positive(j["spacing"], path + "/spacing");
        center();
        if (j.contains("axis")) a.axis = r.vec2(j["axis"], path + "/axis");
    } else if (a.builder == "rectangular") {
        r.only_keys(j, path, {"builder", "nx", "ny", "aperture", "spacing", "center"});
        a.nx = r.count(r.req(j, "nx", path), path + "/nx", 2);
        a.ny = r.count(r.req(j, "ny", path), path + "/ny", 2);
        if (j.contains("aperture") == j.contains("spacing")) r.fail(path, "give exactly one of aperture, spacing");
        const std::string key = j.contains("aperture") ? "aperture" : "spacing";
        const Vec2 v = r.vec2(j[key], path + "/" + key);
        if (!(v.x > 0.0 && v.y > 0.0)) r.fail(path + "/" + key, "expected positive values");
        (key == "aperture" ? a.aperture : a.spacing) = v.x;
        (key == "aperture" ? a.aperture_y : a.spacing_y) = v.y;
        center();
    } else if (a.builder == "circular" || a.builder == "concentric") {
        const bool conc = a.builder == "concentric";
        if (conc)
            r.only_keys(j, path, {"builder", "n", "arc_deg", "radii", "center", "start_deg"});
        else
            r.only_keys(j, path, {"builder", "n", "arc_deg", "radius", "center", "start_deg"});
        a.n = r.count(r.req(j, "n", path), path + "/n", 2);
        a.arc_deg = r.positive(r.req(j, "arc_deg", path), path + "/arc_deg");
        if (a.arc_deg > 360.0) r.fail(path + "/arc_deg", "arc exceeds 360 degrees");
        if (conc) {
            const json& radii = r.req(j, "radii", path);
            if (radii.is_object()) {
                r.only_keys(radii, path + "/radii", {"min", "max", "rings"});
                const double lo = r.positive(r.req(radii, "min", path + "/radii"), path + "/radii/min");
                const double hi = r.positive(r.req(radii, "max", path + "/radii"), path + "/radii/max");
                const std::size_t n = r.count(r.req(radii, "rings", path + "/radii"), path + "/radii/rings", 2);
                if (!(hi > lo)) r.fail(path + "/radii", "max must exceed min");
                for (std::size_t i = 0; i < n; ++i)
                    a.radii.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
            } else if (radii.is_array()) {
                for (std::size_t i = 0; i < radii.size(); ++i)
                    a.radii.push_back(r.positive(radii[i], path + "/radii/" + std::to_string(i)));
            } else {
                r.fail(path + "/radii", "expected a list or {min, max, rings}");
            }
        } else {
            a.radius = r.positive(r.req(j, "radius", path), path + "/radius");
        }
        center();
        if (j.contains("start_deg")) a.start_deg = r.number(j["start_deg"], path + "/start_deg");
    } else if (a.builder == "points") {
        r.only_keys(j, path, {"builder", "points"});
        const json& pts = r.req(j, "points", path);
        if (!pts.is_array() || pts.empty()) r.fail(path + "/points", "expected a non-empty list of [x, y]");
        for (std::size_t i = 0; i < pts.size(); ++i) a.points.push_back(r.vec2(pts[i], path + "/points/" + std::to_string(i)));
    } else if (a.builder == "subset") {
        r.only_keys(j, path, {"builder", "parent", "indices", "range"});
        a.parent = r.string(r.req(j, "parent", path), path + "/parent");
        known(a.parent, path + "/parent");
        if (j.contains("indices") == j.contains("range")) r.fail(path, "give exactly one of indices, range");
        if (j.contains("range")) {
            const json& rg = j["range"];
            if (!rg.is_array() || rg.size() != 2) r.fail(path + "/range", "expected [first, last)");
            const std::size_t b = r.count(rg[0], path + "/range/0", 0), e = r.count(rg[1], path + "/range/1", 0);
            if (e <= b) r.fail(path + "/range", "empty range");
            for (std::size_t i = b; i < e; ++i) a.indices.push_back(i);
        } else {
            const json& ix = j["indices"];
            if (!ix.is_array() || ix.empty()) r.fail(path + "/indices", "expected a non-empty list");
            for (std::size_t i = 0; i < ix.size(); ++i) a.indices.push_back(r.count(ix[i], path + "/indices/" + std::to_string(i), 0));
        }
    } else if (a.builder == "union") {
        r.only_keys(j, path, {"builder", "members"});
        const json& m = r.req(j, "members", path);
        if (!m.is_array() || m.size() < 2) r.fail(path + "/members", "expected at least two array names");
        for (std::size_t i = 0; i < m.size(); ++i) {
            const auto p = path + "/members/" + std::to_string(i);
            a.members.push_back(r.string(m[i], p));
            known(a.members.back(), p);
        }
    } else {
        r.fail(path + "/builder",
               "unknown builder '" + a.builder + "' (linear | rectangular | circular | concentric | points | subset | union)");
    }
    return a;
}

SceneSpec parse_scene(const Reader& r, const json& j, const std::string& path)
{
    r.only_keys(j, path, {"source", "region", "shape", "wavelength"});
    SceneSpec s;
    s.source = r.vec2(r.req(j, "source", path), path + "/source");
    const json& reg = r.req(j, "region", path);
    if (!reg.is_array() || reg.size() != 4) r.fail(path + "/region", "expected [xmin, xmax, ymin, ymax]");
    s.region = {r.number(reg[0], path + "/region/0"), r.number(reg[1], path + "/region/1"),
                r.number(reg[2], path + "/region/2"), r.number(reg[3], path + "/region/3")};
    if (!(s.region.xmax > s.region.xmin && s.region.ymax > s.region.ymin)) r.fail(path + "/region", "empty region");
    const json& sh = r.req(j, "shape", path);
    if (!sh.is_array() || sh.size() != 2) r.fail(path + "/shape", "expected [nx, ny]");
    s.nx = r.count(sh[0], path + "/shape/0", 2);
    s.ny = r.count(sh[1], path + "/shape/1", 2);
    if (j.contains("wavelength")) s.wavelength = r.positive(j["wavelength"], path + "/wavelength");
    return s;
}

const std::set<std::string> kKinds{"af",          "afr",        "overlay",     "resolution",  "ncz",
                                   "cae",         "spectrum-g", "spectrum-h",  "loci",        "check-prop1",
                                   "check-prop2", "check-prop3", "safe-spacing", "sweep"};

OutputSpec parse_output(const Reader& r, const json& j, const std::string& path, const Scenario& sc)
{
    OutputSpec o;
    o.kind = r.string(r.req(j, "kind", path), path + "/kind");
    if (!kKinds.count(o.kind)) r.fail(path + "/kind", "unknown output kind '" + o.kind + "'");
    r.only_keys(j, path,
                {"kind", "name", "array", "other", "scene", "test", "axis", "frame", "expect", "shape", "threshold",
                 "method", "weighting", "polar", "region", "line", "arc", "samples", "asymptotes"});

    auto array_ref = [&](const std::string& key) {
        const auto p = path + "/" + key;
        const auto name = r.string(r.req(j, key, path), p);
        for (const auto& a : sc.arrays)
            if (a.first == name) return name;
        r.fail(p, "unknown array '" + name + "'");
    };
    if (o.kind != "sweep") o.array = array_ref("array");
    if (o.kind == "check-prop1" || o.kind == "check-prop2" || o.kind == "check-prop3") o.other = array_ref("other");
    if (j.contains("scene")) {
        o.scene = r.string(j["scene"], path + "/scene");
        if (!sc.scenes.count(o.scene)) r.fail(path + "/scene", "unknown scene '" + o.scene + "'");
    } else if (o.kind != "sweep" && !sc.scenes.count("scene")) {
        r.fail(path + "/scene", "no default scene; name one");
    }
    o.stem = j.contains("name") ? r.string(j["name"], path + "/name") : (o.array.empty() ? o.kind : o.array + "_" + o.kind);
    if (o.stem.empty() || o.stem.find_first_of("/\\") != std::string::npos || o.stem[0] == '.')
        r.fail(path + "/name", "invalid artifact name");
    if (j.contains("test")) o.test = r.vec2(j["test"], path + "/test");
    if (j.contains("axis")) o.axis = parse_axis(r, j["axis"], path + "/axis");
    if (j.contains("frame")) o.frame = parse_frame(r, j["frame"], path + "/frame");
    if (j.contains("expect")) {
        const auto s = r.string(j["expect"], path + "/expect");
        if (s == "equal")
            o.expect = Verdict::equal;
        else if (s == "strictly_larger")
            o.expect = Verdict::strictly_larger;
        else if (s == "strictly_smaller")
            o.expect = Verdict::strictly_smaller;
        else
            r.fail(path + "/expect", "expected equal | strictly_larger | strictly_smaller");
    }
    if ((o.kind == "cae" || o.kind == "spectrum-g" || o.kind == "loci") && !o.test)
        r.fail(path + "/test", "missing required field");
    if (j.contains("shape")) {
        const json& sh = j["shape"];
        if (!sh.is_array() || sh.size() != 2) r.fail(path + "/shape", "expected [m1, m2]");
        o.spectrum.m1 = r.count(sh[0], path + "/shape/0", 2);
        o.spectrum.m2 = r.count(sh[1], path + "/shape/1", 2);
    }
    if (j.contains("threshold")) {
        o.spectrum.threshold = r.positive(j["threshold"], path + "/threshold");
        if (o.spectrum.threshold >= 1.0) r.fail(path + "/threshold", "expected a value in (0, 1)");
    }
    if (j.contains("method")) {
        const auto m = r.string(j["method"], path + "/method");
        if (m == "marginal_energy")
            o.spectrum.method = SupportMethod::marginal_energy;
        else if (m == "peak_magnitude")
            o.spectrum.method = SupportMethod::peak_magnitude;
        else
            r.fail(path + "/method", "expected marginal_energy | peak_magnitude");
    }
    if (j.contains("weighting")) {
        const auto w = r.string(j["weighting"], path + "/weighting");
        if (w == "physical")
            o.spectrum.weighting = SampleWeighting::physical;
        else if (w == "phase_only")
            o.spectrum.weighting = SampleWeighting::phase_only;
        else
            r.fail(path + "/weighting", "expected physical | phase_only");
    }
    if (j.contains("polar")) o.polar = r.boolean(j["polar"], path + "/polar");
    if (j.contains("region")) {
        const json& reg = j["region"];
        if (!reg.is_array() || reg.size() != 4) r.fail(path + "/region", "expected [k1min, k1max, k2min, k2max]");
        Rect rr{r.number(reg[0], path + "/region/0"), r.number(reg[1], path + "/region/1"),
                r.number(reg[2], path + "/region/2"), r.number(reg[3], path + "/region/3")};
        if (!(rr.xmax > rr.xmin && rr.ymax > rr.ymin)) r.fail(path + "/region", "empty region");
        o.spectrum.region = rr;
    }
    if (j.contains("line") && j.contains("arc")) r.fail(path, "give at most one of line, arc");
    if (j.contains("line")) {
        const json& l = j["line"];
        if (!l.is_array() || l.size() != 2) r.fail(path + "/line", "expected [[x0, y0], [x1, y1]]");
        o.curve = SamplingCurve::line(r.vec2(l[0], path + "/line/0"), r.vec2(l[1], path + "/line/1"));
    }
    if (j.contains("arc")) {
        const json& a = j["arc"];
        r.only_keys(a, path + "/arc", {"center", "radius", "from_deg", "to_deg"});
        o.curve = SamplingCurve::arc(r.vec2(r.req(a, "center", path + "/arc"), path + "/arc/center"),
                                     r.positive(r.req(a, "radius", path + "/arc"), path + "/arc/radius"),
                                     radians(r.number(r.req(a, "from_deg", path + "/arc"), path + "/arc/from_deg")),
                                     radians(r.number(r.req(a, "to_deg", path + "/arc"), path + "/arc/to_deg")));
    }
    if (o.kind == "loci" && !o.curve) r.fail(path, "loci needs a line or an arc");
    if (o.kind == "loci" && !o.axis) r.fail(path + "/axis", "missing required field");
    if (j.contains("samples")) o.samples = r.count(j["samples"], path + "/samples", 2);
    if (j.contains("asymptotes")) o.asymptotes = r.boolean(j["asymptotes"], path + "/asymptotes");
    return o;
}

const std::set<std::string> kSweepParams{"spacing", "aperture", "n", "source_distance", "radius", "arc_deg"};
const std::set<std::string> kTrends{"constant",       "increasing",      "decreasing", "non-increasing",
                                    "non-decreasing"};

SweepSpec parse_sweep(const Reader& r, const json& j, const std::string& path, const Scenario& sc)
{
    r.only_keys(j, path, {"array", "parameters", "frame", "expect"});
    SweepSpec s;
    s.array = r.string(r.req(j, "array", path), path + "/array");
    bool found = false;
    for (const auto& a : sc.arrays) found |= a.first == s.array;
    if (!found) r.fail(path + "/array", "unknown array '" + s.array + "'");
    const json& p = r.req(j, "parameters", path);
    if (!p.is_object()) r.fail(path + "/parameters", "expected {parameter: [values]}");
    if (p.size() != 1) r.fail(path + "/parameters", "exactly one swept parameter per sweep block");
    s.parameter = p.begin().key();
    if (!kSweepParams.count(s.parameter))
        r.fail(path + "/parameters/" + s.parameter,
               "unknown parameter (spacing | aperture | n | source_distance | radius | arc_deg)");
    const json& v = p.begin().value();
    const auto vp = path + "/parameters/" + s.parameter;
    if (!v.is_array() || v.size() < 2) r.fail(vp, "expected at least two values");
    for (std::size_t i = 0; i < v.size(); ++i) s.values.push_back(r.positive(v[i], vp + "/" + std::to_string(i)));
    if (j.contains("frame")) s.frame = parse_frame(r, j["frame"], path + "/frame");
    if (j.contains("expect")) {
        const json& e = j["expect"];
        r.only_keys(e, path + "/expect", {"afr_area", "delta_1", "delta_2", "k_max"});
        for (auto it = e.begin(); it != e.end(); ++it) {
            const auto ep = path + "/expect/" + it.key();
            const auto t = r.string(it.value(), ep);
            const auto base = t.substr(0, t.find('+'));
            if (!kTrends.count(base) || (t.size() > base.size() && t.substr(base.size()) != "+plateau"))
                r.fail(ep, "unknown trend '" + t + "'");
            s.expect[it.key()] = t;
        }
    }
    return s;
}

} // namespace


Scenario parse_scenario(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
        const std::size_t line =
            static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte ? byte - 1 : 0), '\n')) + 1;
        throw ParseError("", line, "line " + std::to_string(line) + ": syntax error: " + e.what());
    }
    const Reader r(text);
    r.only_keys(j, "", {"name", "description", "output_dir", "arrays", "scene", "scenes", "outputs", "sweep"});

    Scenario s;
    s.name = r.string(r.req(j, "name", ""), "/name");
    if (s.name.empty() || s.name.find_first_of("/\\") != std::string::npos || s.name[0] == '.')
        r.fail("/name", "invalid scenario name");
    if (j.contains("description")) s.description = r.string(j["description"], "/description");
    s.output_dir = j.contains("output_dir") ? r.string(j["output_dir"], "/output_dir") : s.name;
    if (s.output_dir.empty() || s.output_dir.find("..") != std::string::npos || s.output_dir[0] == '/')
        r.fail("/output_dir", "must be a relative path inside the output root");

    const json& arrays = r.req(j, "arrays", "");
    if (!arrays.is_array() || arrays.empty()) r.fail("/arrays", "expected a non-empty list");
    for (std::size_t i = 0; i < arrays.size(); ++i) {
        const auto p = "/arrays/" + std::to_string(i);
        const auto name = r.string(r.req(arrays[i], "name", p), p + "/name");
        for (const auto& a : s.arrays)
            if (a.first == name) r.fail(p + "/name", "duplicate array name '" + name + "'");
        json body = arrays[i];
        body.erase("name");
        s.arrays.emplace_back(name, parse_array(r, body, p, s.arrays));
    }
    if (j.contains("scene")) s.scenes["scene"] = parse_scene(r, j["scene"], "/scene");
    if (j.contains("scenes")) {
        const json& sc = j["scenes"];
        if (!sc.is_object()) r.fail("/scenes", "expected {name: scene}");
        for (auto it = sc.begin(); it != sc.end(); ++it) {
            if (it.key() == "scene") r.fail("/scenes/scene", "reserved name; use the top-level scene field");
            s.scenes[it.key()] = parse_scene(r, it.value(), "/scenes/" + it.key());
        }
    }
    if (j.contains("sweep")) s.sweep = parse_sweep(r, j["sweep"], "/sweep", s);

    const json& outs = r.req(j, "outputs", "");
    if (!outs.is_array() || outs.empty()) r.fail("/outputs", "expected a non-empty list");
    std::set<std::string> stems;
    for (std::size_t i = 0; i < outs.size(); ++i) {
        const auto p = "/outputs/" + std::to_string(i);
        s.outputs.push_back(parse_output(r, outs[i], p, s));
        if (!stems.insert(s.outputs.back().stem).second) r.fail(p + "/name", "duplicate artifact name '" + s.outputs.back().stem + "'");
        if (s.outputs.back().kind == "sweep" && !s.sweep) r.fail(p + "/kind", "sweep output needs a sweep block");
    }
    if (s.sweep && !s.scenes.count("scene")) r.fail("/scene", "sweeps use the default scene");
    return s;
}


Scenario load_scenario(const fs::path& file)
{
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError("", 0, "cannot read " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

} // namespace nfal::cli
