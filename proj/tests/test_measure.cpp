#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zonediag/measure.hpp"
#include "zonediag/voronoi.hpp"

using namespace zd;

namespace {

const Space plane = Space::box({-6, -6}, {6, 6}, Norm::L2);

}  // namespace

TEST_CASE("ray extent: bisector, escape, and density cap") {
    const Point p{-1.0, 0.0};
    const std::vector<Point> a{{1.0, 0.0}};
    // toward the rival: the reach ends where t = d(p + t theta, A), at t = 1
    CHECK(ray_dominance_extent(plane, p, {1.0, 0.0}, a, 100.0) ==
          doctest::Approx(1.0).epsilon(1e-8));
    // away from the rival the condition never fails; capped by the box exit
    CHECK(ray_dominance_extent(plane, p, {-1.0, 0.0}, a, 100.0) ==
          doctest::Approx(5.0).epsilon(1e-12));
    CHECK(ray_dominance_extent(plane, p, {-1.0, 0.0}, a, 3.0) == 3.0);

    // a surrounding site cloud caps the reach by the covering radius
    std::vector<Point> lattice;
    for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6; ++j)
            if (i || j) lattice.push_back({static_cast<double>(i), static_cast<double>(j)});
    Rng rng(3);
    const double rho = std::sqrt(0.5) + 1e-9;
    for (int t = 0; t < 200; ++t) {
        const Point theta = rng.unit_vector(2);
        const double reach =
            ray_dominance_extent(plane, {0.0, 0.0}, theta, lattice, 100.0);
        CHECK(reach <= rho + 1e-6);
    }

    CHECK_THROWS_AS(ray_dominance_extent(plane, {1.0, 0.0}, {1.0, 0.0}, a, 1.0),
                    std::domain_error);
}

TEST_CASE("ray feasible set is an interval containing zero") {
    Rng rng(7);
    for (int t = 0; t < 1000; ++t) {
        Point p{rng.uniform(-4, 4), rng.uniform(-4, 4)};
        std::vector<Point> a;
        for (int i = 0; i < 3; ++i) a.push_back({rng.uniform(-6, 6), rng.uniform(-6, 6)});
        bool skip = false;
        for (const Point& q : a)
            if (norm_distance(Norm::L2, p, q) < 1e-6) skip = true;
        if (skip) continue;
        const Point theta = rng.unit_vector(2);
        const double sup = ray_dominance_extent(plane, p, theta, a, 8.0);

        // dense scan: feasibility must flip at most once, at the reported sup
        bool was_feasible = true;
        for (int s = 0; s <= 400; ++s) {
            const double t_scan = 8.0 * s / 400.0;
            Point x{p[0] + t_scan * theta[0], p[1] + t_scan * theta[1]};
            if (!plane.contains(x)) break;
            double da = kInf;
            for (const Point& q : a) da = std::min(da, norm_distance(Norm::L2, x, q));
            const bool feasible = t_scan <= da;
            if (!was_feasible) CHECK_FALSE(feasible);
            if (feasible) CHECK(t_scan <= sup + 1e-6);
            else CHECK(t_scan >= sup - 1e-6);
            was_feasible = feasible;
        }
    }
}

TEST_CASE("ray extent shrinks when the rival set grows") {
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const Point p{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        std::vector<Point> a{{rng.uniform(-5, 5), rng.uniform(-5, 5)}};
        if (norm_distance(Norm::L2, p, a[0]) < 1e-3) continue;
        std::vector<Point> bigger = a;
        bigger.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5)});
        if (norm_distance(Norm::L2, p, bigger[1]) < 1e-3) continue;
        const Point theta = rng.unit_vector(2);
        CHECK(ray_dominance_extent(plane, p, theta, bigger, 6.0) <=
              ray_dominance_extent(plane, p, theta, a, 6.0) + 1e-9);
    }
}

TEST_CASE("radial volume: constant profiles give ball volumes") {
    for (const auto& [m, reach, expect] :
         {std::tuple{2, 1.0, std::numbers::pi},
          std::tuple{3, 1.0, 4.0 * std::numbers::pi / 3.0},
          std::tuple{2, 2.0, 4.0 * std::numbers::pi}}) {
        RadialProfile prof;
        prof.m = m;
        prof.center = Point(m, 0.0);
        prof.reach.assign(100000, reach);
        const VolumeEstimate est = radial_volume(prof);
        CHECK(est.value == doctest::Approx(expect).epsilon(0.01));
        CHECK(est.std_error == doctest::Approx(0.0));
    }
    RadialProfile tiny;
    tiny.m = 2;
    tiny.reach.assign(10, 1.0);
    CHECK_THROWS_AS(radial_volume(tiny), std::invalid_argument);
}

TEST_CASE("radial volume matches the raster cell volume within 2 percent") {
    // center cell of a 3x3 site grid is the square [-1,1]^2
    std::vector<Point> rivals;
    for (int i = -2; i <= 2; i += 2)
        for (int j = -2; j <= 2; j += 2)
            if (i || j) rivals.push_back({static_cast<double>(i), static_cast<double>(j)});
    Rng rng(13);
    const RadialProfile prof =
        sample_dominance_profile(plane, {0.0, 0.0}, rivals, 20000, 100.0, rng);
    const VolumeEstimate est = radial_volume(prof);
    CHECK(est.value == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("growth factor arithmetic") {
    CHECK(growth_factor(0.32, 1.0, 1.0) == doctest::Approx(1.01).epsilon(1e-12));
    CHECK(growth_factor(64.0, 1.0, 0.5) == 1.5);  // omega side of the min
    const auto table = decay_table(1.01);
    REQUIRE(table.size() == 5);
    CHECK(table.front().first == 2);
    CHECK(table.back().first == 6);
    for (std::size_t i = 1; i < table.size(); ++i)
        CHECK(table[i].second < table[i - 1].second);
    CHECK(table.front().second == doctest::Approx(std::pow(1.01, -2)));
}

TEST_CASE("density check: pass and both failure modes") {
    // dense half-unit lattice filling [0,6]^2 with omega = 1
    {
        std::vector<std::vector<Point>> sites;
        for (int i = 0; i <= 12; ++i)
            for (int j = 0; j <= 12; ++j)
                sites.push_back({{0.5 * i, 0.5 * j}});
        const Space s = Space::box({0, 0}, {6, 6}, Norm::L2);
        Grid g({0, 0}, {6, 6}, {129, 129});
        const DensityReport rep = density_check(SiteTuple(s, sites), g, 1.0);
        CHECK(rep.margin_ok);
        CHECK(rep.covering_ok);
        CHECK(rep.cell_margin_ok);
        CHECK(rep.pass);
        CHECK(rep.cell_margin >= 1.0);
    }
    // thin slab: no point is (8/3) omega away from the boundary
    {
        const Space s = Space::box({0, 0}, {6, 0.5}, Norm::L2);
        Grid g({0, 0}, {6, 0.5}, {65, 9});
        SiteTuple sites(s, {{{1.0, 0.25}}, {{5.0, 0.25}}});
        const DensityReport rep = density_check(sites, g, 1.0);
        CHECK_FALSE(rep.margin_ok);
        CHECK_FALSE(rep.pass);
    }
    // one site at the center, one far away: the covering condition fails
    {
        const Space s = Space::box({0, 0}, {6, 6}, Norm::L2);
        Grid g({0, 0}, {6, 6}, {65, 65});
        SiteTuple sites(s, {{{3.0, 3.0}}, {{0.0, 0.0}}});
        const DensityReport rep = density_check(sites, g, 1.0);
        CHECK(rep.margin_ok);
        CHECK_FALSE(rep.covering_ok);
        CHECK_FALSE(rep.pass);
    }
}

TEST_CASE("concentration on a coarse 2-D lattice scenario") {
    std::vector<std::vector<Point>> sites;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            sites.push_back({{static_cast<double>(i), static_cast<double>(j)}});
    const Space s = Space::box({0, 0}, {6, 6}, Norm::L2);
    Grid g({0, 0}, {6, 6}, {193, 193});
    const ConcentrationReport rep =
        concentration_report(SiteTuple(s, sites), g, 1.0, 1.5, 400);
    CHECK(rep.converged);
    CHECK(rep.double_zone_fixed);
    CHECK(rep.interior_exists);
    CHECK(rep.ratio_pass);
    CHECK(rep.growth == doctest::Approx(growth_factor(1.0, 1.5, 1.0)));
    for (const auto& rc : rep.regions) {
        if (!rc.interior) continue;
        CHECK(rc.ball_condition_ok);
        CHECK(rc.pass);
    }
}
