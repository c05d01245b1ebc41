// SPDX-License-Identifier: Apache-2.0
#include "nfal_cli/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

int report(const nfal::cli::RunOutcome& out)
{
    if (out.exit_code == 2) {
        std::cerr << "error: " << out.message << '\n';
        return 2;
    }
    for (const auto& c : out.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    std::cout << out.manifest.size() << " artifacts in " << out.output_dir.string() << '\n';
    return out.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Near-field aliasing analysis of antenna arrays"};
    app.require_subcommand(1);

    std::string file;
    std::string root;
    unsigned workers = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "Scenario file, or the name of a bundled scenario")->required();
        sub->add_option("-o,--output-root", root, "Output root (default: $NFAL_OUTPUT_ROOT, else ./nfal-out)");
        sub->add_option("-j,--workers", workers, "Worker threads (0: one per hardware thread)");
    };
    auto* run = app.add_subcommand("run", "Run every output of a scenario");
    add_common(run);
    auto* sweep = app.add_subcommand("sweep", "Run the sweep block of a scenario");
    add_common(sweep);
    auto* list = app.add_subcommand("list-scenarios", "List bundled scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list->parsed()) {
        for (const auto& p : nfal::cli::bundled_scenarios()) {
            std::string desc;
            try {
                desc = nfal::cli::load_scenario(p).description;
            } catch (const std::exception& e) {
                desc = std::string("(invalid: ") + e.what() + ")";
            }
            std::cout << p.stem().string() << "\t" << desc << '\n';
        }
        return 0;
    }

    nfal::cli::RunOptions opt;
    if (!root.empty()) opt.output_root = root;
    opt.workers = workers;
    opt.sweep_only = sweep->parsed();
    (void)run;
    return report(nfal::cli::run_file(file, opt));
}
