// SPDX-License-Identifier: Apache-2.0
#include "nfal_cli/scenario.hpp"

#include "nfal/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <unistd.h>

namespace nfal::cli {

namespace {

using io::fmt;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Artifacts go to a staging directory that replaces the final one only on success.
class Stage {
public:
    Stage(fs::path final_dir, const std::string& tag) : final_(std::move(final_dir))
    {
        dir_ = final_.parent_path() / (".staging-" + tag + "-" + std::to_string(::getpid()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    ~Stage()
    {
        std::error_code ec;
        if (!committed_) fs::remove_all(dir_, ec);
    }
    Stage(const Stage&) = delete;
    Stage& operator=(const Stage&) = delete;

    void write(const std::string& rel, const std::function<void(std::ostream&)>& body)
    {
        if (std::find(files_.begin(), files_.end(), rel) != files_.end())
            throw InvalidArgument("artifact '" + rel + "' written twice");
        std::ostringstream ss;
        body(ss);
        const std::string bytes = ss.str();
        std::ofstream out(dir_ / rel, std::ios::binary);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("cannot write " + (dir_ / rel).string());
        files_.push_back(rel);
        manifest_.push_back({rel, sha256_hex(bytes)});
    }

    std::vector<ManifestEntry> commit()
    {
        std::sort(manifest_.begin(), manifest_.end(), [](const auto& a, const auto& b) { return a.path < b.path; });
        std::ostringstream m;
        for (const auto& e : manifest_) m << e.sha256 << "  " << e.path << '\n';
        std::ofstream out(dir_ / "manifest.sha256", std::ios::binary);
        out << m.str();
        out.close();
        if (!out) throw std::runtime_error("cannot write manifest");
        fs::remove_all(final_);
        fs::rename(dir_, final_);
        committed_ = true;
        return manifest_;
    }

private:
    fs::path final_, dir_;
    std::vector<std::string> files_;
    std::vector<ManifestEntry> manifest_;
    bool committed_ = false;
};

void colormap_note(Stage& st, const std::string& pgm, const std::string& quantity,
                   const std::vector<std::pair<unsigned, std::string>>& levels)
{
    st.write(pgm + ".csv", [&](std::ostream& os) {
        os << "# nfal-colormap 1\n# image " << pgm << "\n# quantity " << quantity << "\ngray,value\n";
        for (const auto& [g, v] : levels) os << g << ',' << v << '\n';
    });
}

void write_mask_pgm(std::ostream& os, const RegionMask& m, const std::vector<std::uint16_t>& level)
{
    std::vector<std::uint16_t> px(m.bits.size());
    for (std::size_t row = 0; row < m.grid.ny; ++row) {
        const std::size_t j = m.grid.ny - 1 - row;
        for (std::size_t i = 0; i < m.grid.nx; ++i) px[row * m.grid.nx + i] = level[m.grid.index(i, j)];
    }
    io::write_pgm16(os, m.grid.nx, m.grid.ny, px);
}

void write_bandwidth_csv(std::ostream& os, const BandwidthReport& bw)
{
    os << "# nfal-bandwidth 1\n";
    os << "# frame e1 " << fmt(bw.e1.x) << ' ' << fmt(bw.e1.y) << " e2 " << fmt(bw.e2.x) << ' ' << fmt(bw.e2.y) << '\n';
    os << "axis,k_min,k_max,bandwidth,resolution,argmin,argmax\n";
    for (const auto& a : bw.axes)
        os << to_string(a.axis) << ',' << fmt(a.k_min) << ',' << fmt(a.k_max) << ',' << fmt(a.bandwidth) << ','
           << fmt(a.resolution) << ',' << a.argmin << ',' << a.argmax << '\n';
}

void write_box_csv(std::ostream& os, const ResolutionBox& b)
{
    os << "# nfal-resolution 1\nframe,center_x,center_y,e1_x,e1_y,e2_x,e2_y,width1,width2,origin_x,origin_y\n";
    os << (b.polar ? "polar" : "cartesian") << ',' << fmt(b.center.x) << ',' << fmt(b.center.y) << ',' << fmt(b.e1.x)
       << ',' << fmt(b.e1.y) << ',' << fmt(b.e2.x) << ',' << fmt(b.e2.y) << ',' << fmt(b.width1) << ',' << fmt(b.width2)
       << ',' << fmt(b.origin.x) << ',' << fmt(b.origin.y) << '\n';
}

void write_kv(std::ostream& os, const std::string& tag, const std::vector<std::pair<std::string, std::string>>& kv)
{
    os << "# " << tag << " 1\nkey,value\n";
    for (const auto& [k, v] : kv) os << k << ',' << v << '\n';
}

double max_radius(const ArrayGeometry& a)
{
    double r = 0.0;
    for (const auto& p : a.polar) r = std::max(r, p.r);
    return r;
}

struct Context {
    const Scenario& sc;
    std::map<std::string, ArrayGeometry> arrays;
    Stage& st;
    std::vector<CheckResult>& checks;
};

void run_sweep(Context& ctx);

void run_output(Context& ctx, const OutputSpec& o)
{
    if (o.kind == "sweep") {
        run_sweep(ctx);
        return;
    }
    const ArrayGeometry& arr = ctx.arrays.at(o.array);
    const Scene scene = ctx.sc.scenes.at(o.scene).scene();
    const double k = scene.wavenumber();
    Stage& st = ctx.st;
    const std::string& s = o.stem;

    if (o.kind == "af") {
        const auto g = evaluate_af(arr, scene);
        st.write(s + ".csv", [&](std::ostream& os) { write_grid_csv(os, g); });
        st.write(s + ".pgm", [&](std::ostream& os) { write_grid_pgm(os, g); });
        colormap_note(st, s + ".pgm", "|AF| in dB re peak, linear between levels", {{0, "-60"}, {65535, "0"}});
    } else if (o.kind == "afr" || o.kind == "overlay") {
        const auto d = afr_detail(arr, scene);
        st.write(s + "_mask.csv", [&](std::ostream& os) { write_mask_csv(os, d.mask); });
        st.write(s + "_boundary.csv", [&](std::ostream& os) { write_polylines_csv(os, d.mask.boundary); });
        std::vector<std::uint16_t> level(d.mask.bits.size());
        if (o.kind == "afr") {
            for (std::size_t c = 0; c < level.size(); ++c) level[c] = d.mask.bits[c] ? 65535 : 0;
            st.write(s + ".pgm", [&](std::ostream& os) { write_mask_pgm(os, d.mask, level); });
            colormap_note(st, s + ".pgm", "alias-free region", {{0, "aliased"}, {65535, "alias-free"}});
        } else {
            const auto box = resolution_region(arr, scene.source, k, o.frame);
            const auto res = rasterize(box, scene.grid);
            for (std::size_t c = 0; c < level.size(); ++c)
                level[c] = static_cast<std::uint16_t>((d.mask.bits[c] ? 21845 : 0) + (res.bits[c] ? 43690 : 0));
            st.write(s + "_resolution.csv", [&](std::ostream& os) { write_box_csv(os, box); });
            st.write(s + "_resolution_outline.csv", [&](std::ostream& os) { write_polylines_csv(os, std::vector<Polyline>{outline(box)}); });
            st.write(s + ".pgm", [&](std::ostream& os) { write_mask_pgm(os, d.mask, level); });
            colormap_note(st, s + ".pgm", "alias-free region and resolution region",
                          {{0, "aliased"},
                           {21845, "alias-free"},
                           {43690, "resolution region, aliased"},
                           {65535, "resolution region, alias-free"}});
        }
    } else if (o.kind == "resolution") {
        const auto box = resolution_region(arr, scene.source, k, o.frame);
        st.write(s + ".csv", [&](std::ostream& os) { write_box_csv(os, box); });
        st.write(s + "_outline.csv", [&](std::ostream& os) { write_polylines_csv(os, std::vector<Polyline>{outline(box)}); });
        st.write(s + "_bandwidth.csv",
                 [&](std::ostream& os) { write_bandwidth_csv(os, bandwidth(arr, scene.source, k, o.frame)); });
    } else if (o.kind == "ncz") {
        const auto m = o.axis ? ncz(arr, scene.source, k, *o.axis, scene.grid, o.frame)
                              : ncz_all(arr, scene.source, k, scene.grid, o.frame);
        st.write(s + "_mask.csv", [&](std::ostream& os) { write_mask_csv(os, m); });
        st.write(s + "_boundary.csv", [&](std::ostream& os) { write_polylines_csv(os, m.boundary); });
        std::vector<std::uint16_t> level(m.bits.size());
        for (std::size_t c = 0; c < level.size(); ++c) level[c] = m.bits[c] ? 65535 : 0;
        st.write(s + ".pgm", [&](std::ostream& os) { write_mask_pgm(os, m, level); });
        colormap_note(st, s + ".pgm", "non-contributive zone", {{0, "contributive"}, {65535, "non-contributive"}});
    } else if (o.kind == "cae") {
        const auto axes = o.axis ? std::vector<Axis>{*o.axis} : default_afr_axes(arr);
        st.write(s + ".csv", [&](std::ostream& os) {
            os << "# nfal-cae 1\n# test " << fmt(o.test->x) << ' ' << fmt(o.test->y) << "\naxis,K,limit,antenna,x,y\n";
            for (Axis ax : axes) {
                const auto mf = max_matched_frequency(arr, *o.test, scene.source, k, ax);
                const double lim = arr.spacing(ax) ? aliasing_limit(arr, ax) : kNaN;
                for (auto i : mf.cae)
                    os << to_string(ax) << ',' << fmt(mf.K) << ',' << fmt(lim) << ',' << i << ','
                       << fmt(arr.elements[i].x) << ',' << fmt(arr.elements[i].y) << '\n';
            }
        });
    } else if (o.kind == "spectrum-g" || o.kind == "spectrum-h") {
        const bool polar = o.polar.value_or(arr.coord_system == CoordSystem::polar);
        const bool g = o.kind == "spectrum-g";
        const SpectrumEstimate e = g ? (polar ? spectrum_polar_g(arr, *o.test, scene.source, k, o.spectrum)
                                              : spectrum_g(arr, *o.test, scene.source, k, o.spectrum))
                                     : (polar ? spectrum_polar_h(arr, scene.source, k, o.spectrum)
                                              : spectrum_h(arr, scene.source, k, o.spectrum));
        st.write(s + ".csv", [&](std::ostream& os) { write_spectrum_csv(os, e); });
        st.write(s + ".pgm", [&](std::ostream& os) { write_spectrum_pgm(os, e); });
        colormap_note(st, s + ".pgm", "spectrum magnitude in dB re peak, linear between levels",
                      {{0, "-60"}, {65535, "0"}});
    } else if (o.kind == "loci") {
        const auto res = exact_loci(*o.test, scene.source, k, *o.axis, *o.curve, o.samples);
        st.write(s + ".csv", [&](std::ostream& os) {
            os << "# nfal-loci 1\n# degenerate " << (res.degenerate ? 1 : 0) << "\nroot,param,x,y\n";
            for (std::size_t i = 0; i < res.roots.size(); ++i)
                os << i << ',' << fmt(res.params[i]) << ',' << fmt(res.roots[i].x) << ',' << fmt(res.roots[i].y) << '\n';
        });
        if (o.asymptotes) {
            const auto cc = hyperbola_coefficients(*o.test, scene.source);
            const auto [l1, l2] = asymptotes(cc);
            const auto& r = scene.grid.region;
            std::vector<Polyline> lines;
            for (const auto& l : {l1, l2}) {
                if (l.vertical) continue;
                Polyline p;
                for (double x : {r.xmin, r.xmax}) p.points.push_back({x, l.m * x + l.p + cc.y_s});
                lines.push_back(p);
            }
            st.write(s + "_asymptotes.csv", [&](std::ostream& os) { write_polylines_csv(os, lines); });
            st.write(s + "_conic.csv", [&](std::ostream& os) {
                write_kv(os, "nfal-conic", {{"a", fmt(cc.a)}, {"b", fmt(cc.b)}, {"c", fmt(cc.c)}, {"d", fmt(cc.d)},
                                            {"e", fmt(cc.e)}, {"f", fmt(cc.f)}, {"y_s", fmt(cc.y_s)},
                                            {"asymptote1_m", fmt(l1.m)}, {"asymptote1_p", fmt(l1.p)},
                                            {"asymptote2_m", fmt(l2.m)}, {"asymptote2_p", fmt(l2.p)}});
            });
        }
    } else if (o.kind == "check-prop1") {
        const auto r = check_inclusion(arr, ctx.arrays.at(o.other), scene);
        const std::string det = "violations " + std::to_string(r.violations) + ", beyond slack " +
                                std::to_string(r.beyond_slack);
        ctx.checks.push_back({s, r.holds(), det});
        st.write(s + ".csv", [&](std::ostream& os) {
            write_kv(os, "nfal-check",
                     {{"check", "inclusion"}, {"subset", o.array}, {"superset", o.other},
                      {"subset_cells", std::to_string(r.sub_cells)}, {"superset_cells", std::to_string(r.super_cells)},
                      {"violations", std::to_string(r.violations)}, {"beyond_slack", std::to_string(r.beyond_slack)},
                      {"passed", r.holds() ? "1" : "0"}});
        });
    } else if (o.kind == "check-prop2" || o.kind == "check-prop3") {
        const bool removal = o.kind == "check-prop2";
        const auto& other = ctx.arrays.at(o.other);
        const auto r = removal ? check_removal(arr, other, scene) : check_addition(arr, other, scene);
        const bool expect_ok = !o.expect || (r.predicted == *o.expect && r.observed == *o.expect);
        const bool pass = r.agrees && expect_ok;
        ctx.checks.push_back({s, pass,
                              std::string("predicted ") + to_string(r.predicted) + ", observed " +
                                  to_string(r.observed) + (o.expect ? std::string(", expected ") + to_string(*o.expect) : "")});
        st.write(s + ".csv", [&](std::ostream& os) {
            write_kv(os, "nfal-check",
                     {{"check", removal ? "removal" : "addition"}, {"from", o.array}, {"to", o.other},
                      {"predicted", to_string(r.predicted)}, {"observed", to_string(r.observed)},
                      {"expected", o.expect ? to_string(*o.expect) : "any"},
                      {"boundary_cells", std::to_string(r.boundary_cells)},
                      {"triggering_cells", std::to_string(r.triggering_cells)},
                      {"changed_cells", std::to_string(r.changed_cells)},
                      {"max_shift_cells", fmt(r.max_shift_cells)}, {"agrees", r.agrees ? "1" : "0"},
                      {"passed", pass ? "1" : "0"}});
        });
    } else if (o.kind == "safe-spacing") {
        const bool polar = arr.coord_system == CoordSystem::polar;
        const double R = polar ? max_radius(arr) : 0.0;
        bool within = true;
        std::vector<std::pair<std::string, std::string>> kv{{"check", "safe-spacing"}, {"array", o.array}};
        for (Axis ax : default_afr_axes(arr)) {
            const double bound = ax == Axis::theta ? safe_spacing(ArrayKind::circular, scene.wavelength, R)
                                                   : safe_spacing(ArrayKind::cartesian, scene.wavelength);
            const double sp = *arr.spacing(ax);
            within &= sp <= bound * (1.0 + 1e-12);
            kv.push_back({std::string("spacing_") + to_string(ax), fmt(sp)});
            kv.push_back({std::string("bound_") + to_string(ax), fmt(bound)});
        }
        const auto m = afr(arr, scene);
        std::size_t considered = 0, aliased = 0;
        for (std::size_t c = 0; c < m.bits.size(); ++c) {
            if (polar && distance(scene.grid.center(c), arr.origin) > R) continue;
            ++considered;
            if (!m.bits[c] || m.invalid[c]) ++aliased;
        }
        const bool pass = !within || aliased == 0;
        kv.push_back({"within_bound", within ? "1" : "0"});
        kv.push_back({"cells_considered", std::to_string(considered)});
        kv.push_back({"cells_aliased", std::to_string(aliased)});
        kv.push_back({"passed", pass ? "1" : "0"});
        ctx.checks.push_back({s, pass, std::string(within ? "within" : "beyond") + " the safe bound, " +
                                           std::to_string(aliased) + " aliased of " + std::to_string(considered)});
        st.write(s + ".csv", [&](std::ostream& os) { write_kv(os, "nfal-check", kv); });
    } else {
        throw InvalidArgument("unhandled output kind '" + o.kind + "'");
    }
}

// ------------------------------------------------------------------ sweeps

ArraySpec apply_parameter(ArraySpec a, const std::string& p, double v)
{
    const bool lin = a.builder == "linear", rect = a.builder == "rectangular";
    const bool circ = a.builder == "circular" || a.builder == "concentric";
    auto whole = [](double x, const std::string& what) {
        const double r = std::round(x);
        if (std::abs(x - r) > 1e-6 * std::max(1.0, r) || r < 1.0)
            throw InvalidArgument(what + " does not give a whole number of intervals");
        return static_cast<std::size_t>(r);
    };
    if (p == "spacing") {
        if (lin) {
            const double D = a.spacing > 0.0 ? a.spacing * static_cast<double>(a.n - 1) : a.aperture;
            a.n = whole(D / v, "spacing") + 1;
            a.spacing = v;
        } else if (rect) {
            const double Dx = a.spacing > 0.0 ? a.spacing * static_cast<double>(a.nx - 1) : a.aperture;
            const double Dy = a.spacing_y > 0.0 ? a.spacing_y * static_cast<double>(a.ny - 1) : a.aperture_y;
            a.nx = whole(Dx / v, "spacing") + 1;
            a.ny = whole(Dy / v, "spacing") + 1;
            a.spacing = a.spacing_y = v;
        } else if (circ) {
            a.n = a.arc_deg >= 360.0 ? whole(360.0 / v, "spacing") : whole(a.arc_deg / v, "spacing") + 1;
        } else {
            throw InvalidArgument("spacing sweeps need a lattice builder");
        }
    } else if (p == "aperture") {
        if (lin) {
            const double d = a.spacing > 0.0 ? a.spacing : a.aperture / static_cast<double>(a.n - 1);
            a.n = whole(v / d, "aperture") + 1;
            a.spacing = d;
        } else if (rect) {
            const double dx = a.spacing > 0.0 ? a.spacing : a.aperture / static_cast<double>(a.nx - 1);
            const double dy = a.spacing_y > 0.0 ? a.spacing_y : a.aperture_y / static_cast<double>(a.ny - 1);
            a.nx = whole(v / dx, "aperture") + 1;
            a.ny = whole(v / dy, "aperture") + 1;
            a.spacing = dx;
            a.spacing_y = dy;
        } else if (circ) {
            const double d = a.arc_deg >= 360.0 ? 360.0 / static_cast<double>(a.n) : a.arc_deg / static_cast<double>(a.n - 1);
            if (v > 360.0) throw InvalidArgument("arc exceeds 360 degrees");
            a.n = v >= 360.0 ? whole(360.0 / d, "aperture") : whole(v / d, "aperture") + 1;
            a.arc_deg = v;
        } else {
            throw InvalidArgument("aperture sweeps need a lattice builder");
        }
    } else if (p == "n") {
        const std::size_t n = whole(v, "n");
        if (lin) {
            if (a.spacing > 0.0) a.aperture = a.spacing * static_cast<double>(a.n - 1);
            a.spacing = 0.0;
            a.n = n;
        } else if (circ) {
            a.n = n;
        } else {
            throw InvalidArgument("n sweeps need a linear or circular builder");
        }
    } else if (p == "radius") {
        if (a.builder != "circular") throw InvalidArgument("radius sweeps need a circular builder");
        a.radius = v;
    } else if (p == "arc_deg") {
        if (!circ) throw InvalidArgument("arc sweeps need a circular builder");
        if (v > 360.0) throw InvalidArgument("arc exceeds 360 degrees");
        a.arc_deg = v;
    }
    return a;
}

const char* axis_column(Axis a)
{
    switch (a) {
    case Axis::x: return "delta_x";
    case Axis::y: return "delta_y";
    case Axis::r: return "delta_r";
    case Axis::theta: return "delta_theta";
    case Axis::beam: return "delta_beam";
    case Axis::cross: return "delta_cross";
    }
    return "delta";
}

void run_sweep(Context& ctx)
{
    const SweepSpec& sw = *ctx.sc.sweep;
    const SceneSpec base_scene = ctx.sc.scenes.at("scene");
    std::vector<std::vector<double>> cols(6);
    std::vector<std::size_t> elements;
    std::string ax_names[2] = {"delta_1", "delta_2"};
    for (double v : sw.values) {
        Scenario sc = ctx.sc;
        SceneSpec ss = base_scene;
        for (auto& [name, spec] : sc.arrays)
            if (name == sw.array && sw.parameter != "source_distance") spec = apply_parameter(spec, sw.parameter, v);
        const auto arrays = build_arrays(sc);
        const ArrayGeometry& arr = arrays.at(sw.array);
        if (sw.parameter == "source_distance") {
            const Vec2 c = arr.centroid(), d = ss.source - c;
            const double n = norm(d);
            if (!(n > 0.0)) throw InvalidArgument("source_distance sweep: source at the array centroid");
            ss.source = c + d * (v / n);
        }
        const Scene scene = ss.scene();
        const double k = scene.wavenumber();
        const auto det = afr_detail(arr, scene);
        const auto bw = bandwidth(arr, scene.source, k, sw.frame);
        double kmax = kNaN;
        for (auto c : inner_boundary_cells(det.mask)) {
            const double K = det.K[det.binding_axis(c)][c];
            if (std::isnan(kmax) || K > kmax) kmax = K;
        }
        for (int a = 0; a < 2; ++a) ax_names[a] = axis_column(bw.axes[static_cast<std::size_t>(a)].axis);
        cols[0].push_back(v);
        cols[1].push_back(static_cast<double>(det.mask.count()));
        cols[2].push_back(det.mask.area());
        cols[3].push_back(bw.axes[0].resolution);
        cols[4].push_back(bw.axes[1].resolution);
        cols[5].push_back(kmax);
        elements.push_back(arr.size());
    }
    ctx.st.write("sweep.csv", [&](std::ostream& os) {
        os << "# nfal-sweep 1\n# array " << sw.array << "\n# parameter " << sw.parameter << '\n';
        os << sw.parameter << ",elements,afr_cells,afr_area," << ax_names[0] << ',' << ax_names[1] << ",k_max\n";
        for (std::size_t i = 0; i < cols[0].size(); ++i)
            os << fmt(cols[0][i]) << ',' << elements[i] << ',' << fmt(cols[1][i]) << ',' << fmt(cols[2][i]) << ','
               << fmt(cols[3][i]) << ',' << fmt(cols[4][i]) << ',' << fmt(cols[5][i]) << '\n';
    });
    struct Col {
        const char* key;
        std::size_t idx;
        double tol;
    };
    const Col tracked[] = {{"afr_area", 2, 0.0}, {"delta_1", 3, 1e-3}, {"delta_2", 4, 1e-3}, {"k_max", 5, 1e-9}};
    ctx.st.write("sweep_trends.csv", [&](std::ostream& os) {
        os << "# nfal-trends 1\ncolumn,trend,plateaus,expected,passed\n";
        for (const auto& c : tracked) {
            const Trend t = classify(cols[c.idx], c.tol);
            const auto it = sw.expect.find(c.key);
            const bool has = it != sw.expect.end();
            const bool ok = !has || trend_satisfies(t, it->second);
            const std::string name = c.idx == 3 ? ax_names[0] : c.idx == 4 ? ax_names[1] : c.key;
            os << name << ',' << t.label << ',' << t.plateaus << ',' << (has ? it->second : "") << ',' << (ok ? 1 : 0)
               << '\n';
            if (has)
                ctx.checks.push_back({std::string("sweep ") + name, ok,
                                      "observed " + t.label + " (" + std::to_string(t.plateaus) + " plateaus), expected " +
                                          it->second});
        }
    });
}

fs::path resolve_root(const RunOptions& opt)
{
    if (opt.output_root) return *opt.output_root;
    if (const char* env = std::getenv("NFAL_OUTPUT_ROOT"); env && *env) return env;
    return fs::current_path() / "nfal-out";
}

} // namespace

Trend classify(const std::vector<double>& v, double rel_tol)
{
    Trend t;
    int up = 0, down = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double a = v[i - 1], b = v[i];
        if (std::isnan(a) || std::isnan(b)) {
            t.label = "undefined";
            return t;
        }
        const double tol = rel_tol * std::max(std::abs(a), std::abs(b));
        if (std::abs(b - a) <= tol || a == b)
            ++t.plateaus;
        else if (b > a)
            ++up;
        else
            ++down;
    }
    if (!up && !down)
        t.label = "constant";
    else if (!down && !t.plateaus)
        t.label = "increasing";
    else if (!up && !t.plateaus)
        t.label = "decreasing";
    else if (!up)
        t.label = "non-increasing";
    else if (!down)
        t.label = "non-decreasing";
    else
        t.label = "mixed";
    return t;
}

bool trend_satisfies(const Trend& t, const std::string& expected)
{
    const auto plus = expected.find('+');
    const std::string base = expected.substr(0, plus);
    if (plus != std::string::npos && t.plateaus == 0) return false;
    if (base == "non-increasing") return t.label == "non-increasing" || t.label == "decreasing" || t.label == "constant";
    if (base == "non-decreasing") return t.label == "non-decreasing" || t.label == "increasing" || t.label == "constant";
    return t.label == base;
}

RunOutcome run_scenario(const Scenario& s, const RunOptions& opt)
{
    RunOutcome out;
    if (opt.workers) set_worker_count(opt.workers);
    const fs::path root = resolve_root(opt);
    out.output_dir = root / s.output_dir;
    try {
        fs::create_directories(out.output_dir.parent_path());
        auto arrays = build_arrays(s);
        Stage stage(out.output_dir, s.name);
        Context ctx{s, std::move(arrays), stage, out.checks};
        if (opt.sweep_only) {
            if (!s.sweep) throw InvalidArgument("scenario has no sweep block");
            run_sweep(ctx);
        } else {
            for (const auto& o : s.outputs) {
                try {
                    run_output(ctx, o);
                } catch (const std::exception& e) {
                    throw std::runtime_error("output '" + o.stem + "': " + e.what());
                }
            }
        }
        if (!out.checks.empty())
            ctx.st.write("checks.csv", [&](std::ostream& os) {
                os << "# nfal-checks 1\ncheck,passed,detail\n";
                for (const auto& c : out.checks) os << c.name << ',' << (c.passed ? 1 : 0) << ",\"" << c.detail << "\"\n";
            });
        out.manifest = ctx.st.commit();
    } catch (const std::exception& e) {
        out.exit_code = 2;
        out.message = e.what();
        out.manifest.clear();
        return out;
    }
    const bool all = std::all_of(out.checks.begin(), out.checks.end(), [](const auto& c) { return c.passed; });
    out.exit_code = all ? 0 : 1;
    return out;
}

RunOutcome run_file(const fs::path& file, const RunOptions& opt)
{
    fs::path path = file;
    if (!fs::exists(path))
        if (auto b = find_bundled(file.string())) path = *b;
    try {
        return run_scenario(load_scenario(path), opt);
    } catch (const ParseError& e) {
        RunOutcome out;
        out.exit_code = 2;
        out.message = path.string() + ": " + e.what();
        return out;
    }
}

} // namespace nfal::cli
