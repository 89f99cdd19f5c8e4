#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zonediag/sites.hpp"

namespace zd {

enum class Analysis {
    Voronoi,
    Zone,
    Classify,
    Neutral,
    Separation,
    Challenge,
    Measure,
    Density,
};

Analysis parse_analysis(const std::string& s);
std::string to_string(Analysis a);

struct LatticeSpec {
    std::vector<double> lo, hi;
    double pitch = 1.0;
};

// A parsed scenario file. The format is line-oriented key/value text with
// brace-delimited sections; see the repository README for the grammar.
// Unknown keys are rejected.
struct Scenario {
    std::string name;  // bundled name; empty for files

    bool has_space = false;
    WorldKind kind = WorldKind::Box;
    Norm norm = Norm::L2;
    std::vector<double> lo, hi;    // box
    int finite_dim = 1;            // finite worlds
    std::vector<Point> finite_points;

    std::vector<std::vector<Point>> site_points;
    bool has_family = false;
    BuiltinFamily family = BuiltinFamily::ConvergingColumn;
    long kmax = 400;
    bool has_lattice = false;
    LatticeSpec lattice;

    std::vector<int> tuple_voronoi;  // components replaced by their Voronoi cell (1-based)
    std::vector<std::vector<Point>> tuple_regions;

    int grid_n = 0;  // 0 = default for the dimension
    int max_iter = 4000;
    std::uint64_t seed = 1;
    double omega = 0.0, rho = 0.0;
    int challenges = 100;
    std::vector<Analysis> analyses;
    std::string suite;    // "" or "discrete"
    std::string out_dir;  // optional output directory

    int default_grid(int dim) const;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);
std::string serialize_scenario(const Scenario& s);

struct CatalogEntry {
    std::string name;
    std::string description;
    std::string text;
};

// Bundled scenarios; `run` accepts these names as well as file paths.
const std::vector<CatalogEntry>& scenario_catalog();
const CatalogEntry* find_bundled(const std::string& name);

}  // namespace zd
