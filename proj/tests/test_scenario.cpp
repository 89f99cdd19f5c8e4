#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zonediag/runner.hpp"
#include "zonediag/scenario.hpp"

using namespace zd;

TEST_CASE("scenario round trip is lossless") {
    for (const auto& entry : scenario_catalog()) {
        const Scenario once = parse_scenario(entry.text);
        const std::string ser = serialize_scenario(once);
        const Scenario twice = parse_scenario(ser);
        CHECK(serialize_scenario(twice) == ser);
    }
}

TEST_CASE("unknown keys and malformed sections are rejected") {
    CHECK_THROWS_AS(parse_scenario("bogus 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("space {\n  flavor sweet\n}\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("space {\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("}\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scenario("analyses dance\n"), std::invalid_argument);
}

TEST_CASE("catalog covers the documented scenarios") {
    for (const char* name :
         {"fig1_voronoi", "fig2_zone_l2", "fig3_zone_l1", "fig4_territory_l1",
          "fig5_least_double_zone_l1", "fig6_greatest_double_zone_l1", "fig7_glued",
          "fig8_flowers", "glued_space", "concentration_m2", "concentration_m3",
          "density_demo", "discrete_counterexamples", "oned_fixed_point",
          "attainment_column", "attainment_spikes", "attainment_lattice",
          "equilibrium_fig2"}) {
        CAPTURE(name);
        CHECK(find_bundled(name) != nullptr);
    }
    CHECK(find_bundled("no_such_scenario") == nullptr);
}

namespace {

RunResult run_bundled(const std::string& name, RunOverrides ov) {
    const CatalogEntry* e = find_bundled(name);
    REQUIRE(e != nullptr);
    Scenario sc = parse_scenario(e->text);
    sc.name = e->name;
    std::ostringstream sink;
    return run_scenario(sc, ov, sink);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("discrete counterexample scenario passes exactly") {
    namespace fs = std::filesystem;
    RunOverrides ov;
    ov.out_dir = (fs::temp_directory_path() / "zd_run_discrete").string();
    const RunResult res = run_bundled("discrete_counterexamples", ov);
    CHECK(res.exit_code() == 0);
    bool saw_pass = false;
    for (const auto& line : res.checks) {
        CHECK(line.status != "FAIL");
        if (line.status == "PASS") saw_pass = true;
    }
    CHECK(saw_pass);
    CHECK(fs::exists(fs::path(ov.out_dir) / "checks.txt"));
}

TEST_CASE("glued scenario checks the analytic example") {
    namespace fs = std::filesystem;
    RunOverrides ov;
    ov.out_dir = (fs::temp_directory_path() / "zd_run_glued").string();
    const RunResult res = run_bundled("glued_space", ov);
    CHECK(res.exit_code() == 0);
    REQUIRE(res.checks.size() >= 2);
}

TEST_CASE("runner artifacts are byte-identical for a fixed seed") {
    namespace fs = std::filesystem;
    RunOverrides ov;
    ov.grid_n = 121;  // keep the smoke run quick
    ov.max_iter = 400;

    ov.out_dir = (fs::temp_directory_path() / "zd_run_a").string();
    const RunResult a = run_bundled("oned_fixed_point", ov);
    ov.out_dir = (fs::temp_directory_path() / "zd_run_b").string();
    const RunResult b = run_bundled("oned_fixed_point", ov);

    CHECK(a.exit_code() == 0);
    CHECK(slurp((fs::path(a.out_dir) / "checks.txt").string()) ==
          slurp((fs::path(b.out_dir) / "checks.txt").string()));
    CHECK(slurp((fs::path(a.out_dir) / "trace.csv").string()) ==
          slurp((fs::path(b.out_dir) / "trace.csv").string()));
}

TEST_CASE("attainment scenarios settle their masks") {
    namespace fs = std::filesystem;
    RunOverrides ov;
    ov.grid_n = 65;
    ov.out_dir = (fs::temp_directory_path() / "zd_run_column").string();
    const RunResult col = run_bundled("attainment_column", ov);
    CHECK(col.exit_code() == 0);

    ov.out_dir = (fs::temp_directory_path() / "zd_run_spikes").string();
    const RunResult sp = run_bundled("attainment_spikes", ov);
    CHECK(sp.exit_code() == 0);
}
