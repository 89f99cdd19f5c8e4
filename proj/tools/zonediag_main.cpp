#include <CLI11.hpp>

#include <exception>
#include <iostream>

#include "zonediag/runner.hpp"
#include "zonediag/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Voronoi, zone and territory diagrams with neutral-region checks"};
    app.require_subcommand(1);

    std::string target;
    zd::RunOverrides ov;
    std::uint64_t seed_arg = 0;

    CLI::App* run = app.add_subcommand("run", "run a scenario (file path or bundled name)");
    run->add_option("scenario", target, "scenario file or bundled name")->required();
    auto* seed_opt = run->add_option("--seed", seed_arg, "override the RNG seed");
    run->add_option("--grid", ov.grid_n, "override the grid resolution per axis");
    run->add_option("--max-iter", ov.max_iter, "override the iteration cap");
    run->add_option("--out", ov.out_dir, "output directory");

    CLI::App* list = app.add_subcommand("list", "list bundled scenarios");

    CLI11_PARSE(app, argc, argv);

    if (list->parsed()) {
        for (const auto& e : zd::scenario_catalog())
            std::cout << e.name << "\n    " << e.description << "\n";
        return 0;
    }

    try {
        zd::Scenario sc;
        if (const zd::CatalogEntry* e = zd::find_bundled(target)) {
            sc = zd::parse_scenario(e->text);
            sc.name = e->name;
        } else {
            sc = zd::load_scenario_file(target);
        }
        if (seed_opt->count() > 0) ov.seed = seed_arg;
        const zd::RunResult res = zd::run_scenario(sc, ov, std::cout);
        std::cout << "artifacts in " << res.out_dir << "\n";
        return res.exit_code();
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
