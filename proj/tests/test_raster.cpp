#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "zonediag/raster.hpp"
#include "zonediag/rng.hpp"

using namespace zd;

namespace {

Grid unit5x5() { return Grid({0, 0}, {4, 4}, {5, 5}); }

Mask random_mask(Rng& rng, std::size_t n, double density) {
    Mask m(n, 0);
    for (auto& v : m) v = rng.uniform01() < density ? 1 : 0;
    return m;
}

}  // namespace

TEST_CASE("grid: pitch, round trip, tolerance") {
    Grid g({-6, -6}, {6, 6}, {512, 512});
    CHECK(g.pitch(0) == doctest::Approx(12.0 / 511.0).epsilon(1e-15));
    CHECK(g.diameter_tol() == doctest::Approx(g.max_pitch() * std::sqrt(2.0)));
    for (std::size_t flat : {std::size_t(0), std::size_t(511), std::size_t(512),
                             std::size_t(512 * 512 - 1), std::size_t(123456)}) {
        CHECK(g.nearest_index(g.point(flat)) == flat);
    }
    CHECK_THROWS_AS(Grid({0}, {1}, {1}), std::invalid_argument);
}

TEST_CASE("distance field: single center pixel, l1 corners") {
    Grid g = unit5x5();
    Mask m(g.count(), 0);
    m[g.nearest_index({2, 2})] = 1;
    const auto f = mask_distance_field(g, m, Norm::L1);
    for (const Point& corner : {Point{0, 0}, Point{4, 0}, Point{0, 4}, Point{4, 4}})
        CHECK(f[g.nearest_index(corner)] == 4.0);  // two steps per axis
    CHECK(f[g.nearest_index({2, 2})] == 0.0);
    CHECK(f[g.nearest_index({1, 2})] == 1.0);
}

TEST_CASE("distance field: empty mask is infinite everywhere") {
    Grid g = unit5x5();
    Mask m(g.count(), 0);
    for (Norm n : {Norm::L1, Norm::L2, Norm::Linf}) {
        const auto f = mask_distance_field(g, m, n);
        for (double v : f) CHECK(v == kInf);
    }
}

TEST_CASE("distance field: two sources, l2 value from brute force") {
    Grid g = unit5x5();
    Mask m(g.count(), 0);
    m[g.nearest_index({0, 0})] = 1;
    m[g.nearest_index({4, 0})] = 1;
    const auto f = mask_distance_field(g, m, Norm::L2);
    // both sources are at squared distance 8 from (2,2)
    CHECK(f[g.nearest_index({2, 2})] == 8.0);
    CHECK(compare_to_metric(Norm::L2, f[g.nearest_index({2, 2})]) ==
          doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("separable and brute-force backends agree on random masks") {
    Rng rng(29);
    int checked = 0;
    for (int t = 0; t < 100; ++t) {
        const int dim = 1 + static_cast<int>(rng.index(3));
        std::vector<int> n(dim);
        std::vector<double> lo(dim), hi(dim);
        std::size_t total = 1;
        for (int a = 0; a < dim; ++a) {
            n[a] = dim == 3 ? 2 + static_cast<int>(rng.index(9))
                            : 2 + static_cast<int>(rng.index(31));
            lo[a] = rng.uniform(-3, 0);
            hi[a] = lo[a] + rng.uniform(0.5, 6.0);
            total *= static_cast<std::size_t>(n[a]);
        }
        Grid g(lo, hi, n);
        const Mask m = random_mask(rng, total, rng.uniform(0.0, 0.3));
        for (Norm norm : {Norm::L1, Norm::L2, Norm::Linf}) {
            const auto fast = mask_distance_field(g, m, norm);
            const auto slow = mask_distance_field(g, m, norm, FieldBackend::BruteForce);
            for (std::size_t i = 0; i < total; ++i) {
                if (fast[i] == kInf) {
                    CHECK(slow[i] == kInf);
                } else {
                    CHECK(std::abs(fast[i] - slow[i]) <= 1e-9);
                }
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
    // a large sparse instance at the upper size limit
    Grid g({-6, -6}, {6, 6}, {128, 128});
    Mask m(g.count(), 0);
    for (int i = 0; i < 60; ++i) m[rng.index(g.count())] = 1;
    for (Norm norm : {Norm::L1, Norm::L2, Norm::Linf}) {
        const auto fast = mask_distance_field(g, m, norm);
        const auto slow = mask_distance_field(g, m, norm, FieldBackend::BruteForce);
        for (std::size_t i = 0; i < g.count(); ++i)
            CHECK(std::abs(fast[i] - slow[i]) <= 1e-9);
    }
}

TEST_CASE("dominance predicate agrees exactly across backends") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        Grid g({0, 0}, {1 + static_cast<double>(rng.index(5)), 2.0},
               {2 + static_cast<int>(rng.index(24)), 2 + static_cast<int>(rng.index(24))});
        const Mask m = random_mask(rng, g.count(), 0.2);
        std::vector<Point> sites;
        for (int i = 0; i < 3; ++i)
            sites.push_back({rng.uniform(g.lo[0], g.hi[0]), rng.uniform(g.lo[1], g.hi[1])});
        for (Norm norm : {Norm::L1, Norm::L2, Norm::Linf}) {
            const auto own = point_distance_field(g, sites, norm);
            const auto fast = mask_distance_field(g, m, norm);
            const auto slow = mask_distance_field(g, m, norm, FieldBackend::BruteForce);
            for (std::size_t i = 0; i < g.count(); ++i)
                CHECK((own[i] <= fast[i]) == (own[i] <= slow[i]));
        }
    }
}

TEST_CASE("distance field is antitone in the mask") {
    Rng rng(37);
    Grid g({0, 0}, {5, 3}, {41, 23});
    for (int t = 0; t < 20; ++t) {
        Mask small = random_mask(rng, g.count(), 0.05);
        Mask big = small;
        for (std::size_t i = 0; i < big.size(); ++i)
            if (rng.uniform01() < 0.05) big[i] = 1;
        for (Norm norm : {Norm::L1, Norm::L2, Norm::Linf}) {
            const auto fs = mask_distance_field(g, small, norm);
            const auto fb = mask_distance_field(g, big, norm);
            for (std::size_t i = 0; i < g.count(); ++i) CHECK(fb[i] <= fs[i]);
        }
    }
}

TEST_CASE("grid-restricted distance is within one tolerance of the continuum") {
    Rng rng(41);
    Grid g({-2, -2}, {2, 2}, {101, 101});
    for (int t = 0; t < 20; ++t) {
        std::vector<Point> pts;
        for (int i = 0; i < 5; ++i)
            pts.push_back({rng.uniform(-2, 2), rng.uniform(-2, 2)});
        Mask m(g.count(), 0);
        for (const Point& p : pts) m[g.nearest_index(p)] = 1;
        const auto grid_field = mask_distance_field(g, m, Norm::L2);
        const auto cont_field = point_distance_field(g, pts, Norm::L2);
        for (std::size_t i = 0; i < g.count(); ++i) {
            const double dg = compare_to_metric(Norm::L2, grid_field[i]);
            const double dc = compare_to_metric(Norm::L2, cont_field[i]);
            CHECK(std::abs(dg - dc) <= g.diameter_tol());
        }
    }
}

TEST_CASE("mask algebra") {
    Grid g = unit5x5();
    Rng rng(43);
    const Mask a = random_mask(rng, g.count(), 0.4);
    const Mask full(g.count(), 1);
    CHECK(mask_count(mask_complement(full)) == 0);
    CHECK(mask_union(a, mask_complement(a)) == full);
    CHECK(mask_count(mask_intersection(a, mask_complement(a))) == 0);
    CHECK(mask_count(mask_difference(a, a)) == 0);
    CHECK(mask_subset(mask_intersection(a, full), a));
    CHECK_THROWS_AS(mask_union(a, Mask(3, 0)), std::invalid_argument);
}

TEST_CASE("neutral pixel counts against the brute-force golden run") {
    // N = X minus the union of regions, counted per backend
    Rng rng(47);
    Grid g({0, 0}, {3, 3}, {33, 33});
    const Mask r1 = random_mask(rng, g.count(), 0.2);
    const Mask r2 = random_mask(rng, g.count(), 0.2);
    const Mask neutral = mask_complement(mask_union(r1, r2));
    std::size_t direct = 0;
    for (std::size_t i = 0; i < g.count(); ++i)
        if (!r1[i] && !r2[i]) ++direct;
    CHECK(mask_count(neutral) == direct);
}

TEST_CASE("ppm export: deterministic bytes, black background") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "zd_raster_test";
    fs::create_directories(dir);
    Grid g({0, 0}, {2, 2}, {3, 3});
    Mask a(g.count(), 0), b(g.count(), 0);
    a[g.nearest_index({0, 0})] = 1;
    b[g.nearest_index({2, 2})] = 1;

    const auto path = (dir / "t.ppm").string();
    write_ppm(path, g, {a, b}, default_palette());
    write_ppm((dir / "t2.ppm").string(), g, {a, b}, default_palette());

    std::ifstream f1(path, std::ios::binary), f2((dir / "t2.ppm").string(), std::ios::binary);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK(s1.size() > 9 * 3);
    // payload is 9 RGB triples after the final header newline; 7 empty pixels are black
    const std::string payload = s1.substr(s1.size() - 27);
    int black = 0;
    for (int i = 0; i < 9; ++i)
        if (payload[3 * i] == 0 && payload[3 * i + 1] == 0 && payload[3 * i + 2] == 0) ++black;
    CHECK(black == 7);

    write_ppm((dir / "empty.ppm").string(), g, {}, default_palette());
    std::ifstream f3((dir / "empty.ppm").string(), std::ios::binary);
    std::string s3((std::istreambuf_iterator<char>(f3)), std::istreambuf_iterator<char>());
    const std::string p3 = s3.substr(s3.size() - 27);
    for (char ch : p3) CHECK(ch == 0);
}

TEST_CASE("mask dump round trip") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "zd_raster_test";
    fs::create_directories(dir);
    Rng rng(53);
    Grid g({0, 0, 0}, {1, 2, 3}, {4, 5, 6});
    const Mask m = random_mask(rng, g.count(), 0.5);
    const auto path = (dir / "m.mask").string();
    write_mask(path, g, m);
    std::vector<int> shape;
    const Mask back = read_mask(path, &shape);
    CHECK(back == m);
    CHECK(shape == std::vector<int>{4, 5, 6});
}
