#include <doctest.h>

#include <memory>

#include "zonediag/rng.hpp"
#include "zonediag/voronoi.hpp"

using namespace zd;

namespace {

std::shared_ptr<const Carrier> three_point_world() {
    return std::make_shared<FiniteCarrier>(
        Space::finite_points({{-1.0}, {0.0}, {1.0}}, Norm::L2));
}

}  // namespace

TEST_CASE("in_dom: inclusive boundary, strict interior, empty rivals") {
    const Space s = Space::box({-1.0}, {1.0}, Norm::L2);
    const std::vector<Point> p{{-1.0}};
    const std::vector<Point> a{{1.0}};
    CHECK(in_dom(s, p, a, {0.0}));        // tie counts as dominated
    CHECK_FALSE(in_dom(s, p, a, {0.1}));  // strictly nearer to the rival
    CHECK(in_dom(s, p, {}, {0.9}));       // no rivals: infinitely far
    CHECK_THROWS_AS(in_dom(s, {}, a, {0.0}), std::invalid_argument);
}

TEST_CASE("in_dom is antitone in the rival set") {
    Rng rng(5);
    const Space s = Space::box({-3, -3}, {3, 3}, Norm::L1);
    for (int t = 0; t < 200; ++t) {
        std::vector<Point> p{{rng.uniform(-3, 3), rng.uniform(-3, 3)}};
        std::vector<Point> a;
        for (int i = 0; i < 3; ++i) a.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
        std::vector<Point> bigger = a;
        bigger.push_back({rng.uniform(-3, 3), rng.uniform(-3, 3)});
        const Point x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        if (in_dom(s, p, bigger, x)) CHECK(in_dom(s, p, a, x));
    }
}

TEST_CASE("voronoi cells: midpoint tie joins both cells") {
    auto carrier = three_point_world();
    SiteTuple sites(carrier->space(), {{{-1.0}}, {{1.0}}});
    const RegionTuple cells = voronoi_cells(sites, carrier);
    CHECK(cells.comp[0] == Mask{1, 1, 0});
    CHECK(cells.comp[1] == Mask{0, 1, 1});
}

TEST_CASE("voronoi cells: perpendicular bisector lands on the x=2 column") {
    const Space s = Space::box({0, 0}, {4, 4}, Norm::L2);
    Grid g({0, 0}, {4, 4}, {9, 9});
    auto carrier = std::make_shared<GridCarrier>(s, g);
    SiteTuple sites(s, {{{0.0, 0.0}}, {{4.0, 0.0}}});
    const RegionTuple cells = voronoi_cells(sites, carrier);
    for (std::size_t i = 0; i < carrier->size(); ++i) {
        const double x = carrier->point(i)[0];
        CHECK(cells.comp[0][i] == (x <= 2.0 ? 1 : 0));
        CHECK(cells.comp[1][i] == (x >= 2.0 ? 1 : 0));
    }
}

TEST_CASE("voronoi cells cover the carrier for finite tuples") {
    Rng rng(9);
    for (int t = 0; t < 30; ++t) {
        const Space s = Space::box({-5, -5}, {5, 5},
                                   t % 3 == 0 ? Norm::L1
                                   : t % 3 == 1 ? Norm::L2
                                                : Norm::Linf);
        Grid g({-5, -5}, {5, 5}, {17, 17});
        auto carrier = std::make_shared<GridCarrier>(s, g);
        std::vector<std::vector<Point>> pts;
        const int k = 2 + static_cast<int>(rng.index(6));
        for (int i = 0; i < k; ++i)
            pts.push_back({{rng.uniform(-5, 5), rng.uniform(-5, 5)}});
        const RegionTuple cells = voronoi_cells(SiteTuple(s, pts), carrier);
        CHECK(uncovered_count(cells.comp, carrier->size()) == 0);
    }
}

TEST_CASE("voronoi cell membership is invariant under re-indexing") {
    Rng rng(15);
    const Space s = Space::box({-5, -5}, {5, 5}, Norm::L2);
    Grid g({-5, -5}, {5, 5}, {13, 13});
    auto carrier = std::make_shared<GridCarrier>(s, g);
    std::vector<std::vector<Point>> pts;
    for (int i = 0; i < 4; ++i) pts.push_back({{rng.uniform(-5, 5), rng.uniform(-5, 5)}});
    const RegionTuple cells = voronoi_cells(SiteTuple(s, pts), carrier);
    std::vector<std::vector<Point>> rev(pts.rbegin(), pts.rend());
    const RegionTuple cells_rev = voronoi_cells(SiteTuple(s, rev), carrier);
    for (int k = 0; k < 4; ++k) CHECK(cells.comp[k] == cells_rev.comp[3 - k]);
}

TEST_CASE("attainment: finite tuples always attain") {
    const Space s = Space::box({-6, -6}, {6, 6}, Norm::L2);
    std::vector<std::vector<Point>> pts;
    for (int i = 0; i < 8; ++i)
        pts.push_back({{-5.0 + 1.3 * i, 2.0 - 0.7 * i}});
    SiteTuple sites(s, pts);
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        const Point x{rng.uniform(-6, 6), rng.uniform(-6, 6)};
        const Attainment a = nearest_site_attainment(sites, x);
        CHECK(a.attained());
        double best = kInf;
        for (const auto& p : pts) best = std::min(best, norm_distance(Norm::L2, x, p[0]));
        CHECK(a.distance == best);
    }
    auto fam = wrap_finite(sites);
    const Attainment b = nearest_site_attainment(*fam, {0.0, 0.0}, 8);
    CHECK(b.attained());
}

TEST_CASE("attainment: converging column fails exactly on the closed lower halfplane") {
    auto fam = builtin_family(BuiltinFamily::ConvergingColumn);
    const Attainment below = nearest_site_attainment(*fam, {0.0, -1.0}, 64);
    CHECK(below.kind == Attainment::Kind::NotAttained);
    CHECK(below.inf_value == 1.0);

    const Attainment above = nearest_site_attainment(*fam, {0.0, 0.5}, 64);
    CHECK(above.attained());
    CHECK(above.index == 2);  // height 1/2 matches the query exactly
    CHECK(above.distance == 0.0);
}

TEST_CASE("attainment: orthonormal spikes at the origin") {
    auto fam = builtin_family(BuiltinFamily::OrthonormalSpikes);
    const Attainment origin = nearest_site_attainment(*fam, {}, 100);
    CHECK(origin.kind == Attainment::Kind::NotAttained);
    CHECK(origin.inf_value == 1.0);
}

TEST_CASE("neutral attainment mask: column halfplane, lattice empty, finite empty") {
    Grid g({-2, -2}, {2, 2}, {41, 41});

    auto column = builtin_family(BuiltinFamily::ConvergingColumn);
    const auto cm = neutral_voronoi_mask(*column, g, 256);
    CHECK(mask_count(cm.undetermined) == 0);
    for (std::size_t i = 0; i < g.count(); ++i)
        CHECK(cm.neutral[i] == (g.point(i)[1] <= 0.0 ? 1 : 0));

    auto lattice = builtin_family(BuiltinFamily::Lattice);
    const auto lm = neutral_voronoi_mask(*lattice, g, 128);
    CHECK(mask_count(lm.neutral) == 0);
    CHECK(mask_count(lm.undetermined) == 0);

    const Space s = Space::box({-2, -2}, {2, 2}, Norm::L2);
    auto finite = wrap_finite(SiteTuple(s, {{{-1, 0}}, {{1, 0}}}));
    const auto fm = neutral_voronoi_mask(*finite, g, 2);
    CHECK(mask_count(fm.neutral) == 0);
    CHECK(mask_count(fm.undetermined) == 0);
}

TEST_CASE("accumulation consistency reports") {
    std::vector<Point> samples{{0.0, -1.0}, {0.0, 0.5}, {1.0, 1.0}, {0.5, -0.5}};

    auto column = builtin_family(BuiltinFamily::ConvergingColumn);
    const auto r1 = accumulation_consistency(*column, column->declared_accumulation_points(),
                                             true, samples, 256);
    CHECK(r1.consistent());
    CHECK(r1.not_attained > 0);

    auto lattice = builtin_family(BuiltinFamily::Lattice);
    const auto r2 = accumulation_consistency(*lattice, {}, true, samples, 128);
    CHECK(r2.consistent());
    CHECK(r2.not_attained == 0);

    auto spikes = builtin_family(BuiltinFamily::OrthonormalSpikes);
    const auto r3 = accumulation_consistency(*spikes, {}, false,
                                             std::vector<Point>{Point{}}, 64);
    CHECK(r3.consistent());  // not finitely compact: no contradiction
    CHECK(r3.not_attained == 1);

    // and the contradiction does fire when compactness is asserted
    const auto r4 = accumulation_consistency(*spikes, {}, true,
                                             std::vector<Point>{Point{}}, 64);
    CHECK_FALSE(r4.consistent());
}
