#include "zonediag/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "zonediag/measure.hpp"
#include "zonediag/voronoi.hpp"
#include "zonediag/zone.hpp"

namespace zd {

namespace fs = std::filesystem;

bool RunResult::any_fail() const {
    for (const auto& c : checks)
        if (c.status == "FAIL") return true;
    return false;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Ctx {
    const Scenario& sc;
    RunOverrides ov;
    RunResult result;
    std::ostream& log;

    Space space;
    bool have_sites = false;
    SiteTuple sites;
    std::shared_ptr<const Carrier> carrier;
    const Grid* grid = nullptr;  // null for finite carriers

    bool have_trace = false;
    IterationTrace trace;

    bool have_tuple = false;
    RegionTuple tuple;  // classification target (converged or scenario-provided)
    std::string tuple_origin;

    Ctx(const Scenario& s, const RunOverrides& o, std::ostream& l)
        : sc(s), ov(o), log(l) {}

    std::uint64_t seed() const { return ov.seed.value_or(sc.seed); }
    int max_iter() const { return ov.max_iter > 0 ? ov.max_iter : sc.max_iter; }

    void check(const std::string& status, const std::string& name,
               const std::string& details) {
        result.checks.push_back({status, name, details});
        log << status << " " << name << (details.empty() ? "" : "  ") << details
            << "\n";
    }
    void pass_fail(bool ok, const std::string& name, const std::string& details) {
        check(ok ? "PASS" : "FAIL", name, details);
    }

    std::string artifact(const std::string& file) {
        const std::string path = (fs::path(result.out_dir) / file).string();
        result.artifacts.push_back(path);
        return path;
    }
};

std::string csv_header(const Ctx& c) {
    std::ostringstream os;
    os << "# scenario " << (c.sc.name.empty() ? "(file)" : c.sc.name) << "\n";
    os << "# seed " << c.seed() << "\n";
    if (c.grid) {
        os << "# pitch";
        for (int a = 0; a < c.grid->dim(); ++a) os << " " << fmt(c.grid->pitch(a));
        os << "\n# tolerance " << fmt(c.grid->diameter_tol()) << "\n";
    }
    return os.str();
}

std::vector<std::vector<Point>> lattice_sites(const LatticeSpec& spec) {
    std::vector<std::vector<Point>> out;
    const std::size_t d = spec.lo.size();
    std::vector<long> counts(d);
    for (std::size_t a = 0; a < d; ++a)
        counts[a] = static_cast<long>(
                        std::floor((spec.hi[a] - spec.lo[a]) / spec.pitch + 1e-9)) + 1;
    std::vector<long> idx(d, 0);
    while (true) {
        Point p(d);
        for (std::size_t a = 0; a < d; ++a)
            p[a] = spec.lo[a] + static_cast<double>(idx[a]) * spec.pitch;
        out.push_back({p});
        std::size_t a = 0;
        for (; a < d; ++a) {
            if (++idx[a] < counts[a]) break;
            idx[a] = 0;
        }
        if (a == d) break;
    }
    return out;
}

void setup_world(Ctx& c) {
    if (c.sc.kind == WorldKind::GluedSegmentDisk) {
        c.space = Space::glued_segment_disk();
        return;
    }
    if (!c.sc.has_space) return;  // family-native scenarios
    if (c.sc.kind == WorldKind::Box) {
        c.space = Space::box(c.sc.lo, c.sc.hi, c.sc.norm);
        const int dim = c.space.dim();
        const int n = c.ov.grid_n > 0 ? c.ov.grid_n : c.sc.default_grid(dim);
        auto gc = std::make_shared<GridCarrier>(
            c.space, Grid(c.sc.lo, c.sc.hi, std::vector<int>(dim, n)));
        c.grid = gc->grid();
        c.carrier = std::move(gc);
    } else {
        std::vector<Point> pts;
        for (const Point& p : c.sc.finite_points) {
            if (static_cast<int>(p.size()) != c.sc.finite_dim)
                throw std::invalid_argument("finite point dimension mismatch");
            pts.push_back(p);
        }
        c.space = Space::finite_points(std::move(pts), c.sc.norm);
        c.carrier = std::make_shared<FiniteCarrier>(c.space);
    }

    std::vector<std::vector<Point>> sites = c.sc.site_points;
    if (c.sc.has_lattice) {
        auto ls = lattice_sites(c.sc.lattice);
        sites.insert(sites.end(), ls.begin(), ls.end());
    }
    if (!sites.empty()) {
        c.sites = SiteTuple(c.space, std::move(sites));
        c.have_sites = true;
    }
}

void write_trace_csv(Ctx& c) {
    const std::string path = c.artifact("trace.csv");
    std::ofstream out(path);
    out << csv_header(c);
    out << "step";
    for (int k = 0; k < c.trace.even_limit.count(); ++k) out << ",comp" << k + 1;
    out << ",neutral\n";
    for (const auto& s : c.trace.steps) {
        out << s.step;
        for (auto v : s.comp_count) out << "," << v;
        out << "," << s.neutral_count << "\n";
    }
}

void write_region_images(Ctx& c, const RegionTuple& even, const RegionTuple& odd) {
    if (!c.grid || c.grid->dim() != 2) return;
    write_ppm(c.artifact("zone_even.ppm"), *c.grid, even.comp, default_palette(),
              "least iterate");
    write_ppm(c.artifact("zone_odd.ppm"), *c.grid, odd.comp, default_palette(),
              "greatest iterate");
    for (int k = 0; k < even.count(); ++k)
        write_mask(c.artifact("zone_even_" + std::to_string(k + 1) + ".mask"),
                   *c.grid, even.comp[k]);
}

void run_zone(Ctx& c) {
    if (!c.have_sites) throw std::invalid_argument("zone analysis needs sites");
    c.trace = iterate_dom(c.sites, c.carrier, c.max_iter());
    c.have_trace = true;
    c.tuple = c.trace.even_limit;
    c.have_tuple = true;
    c.tuple_origin = "converged least iterate";

    c.pass_fail(c.trace.converged, "zone.converged",
                "stabilized at step " + std::to_string(c.trace.stabilized_at));
    c.pass_fail(c.trace.sandwich_ok, "zone.sandwich_chain",
                "even iterates grow, odd iterates shrink, even below odd");
    c.check("INFO", "zone.unique",
            c.trace.unique_zone ? "even and odd limits coincide (zone diagram)"
                                : "least and greatest iterates differ");
    const std::size_t neutral =
        c.carrier->size() - mask_count(c.trace.even_limit.covered());
    c.check("INFO", "zone.neutral_pixels", std::to_string(neutral));

    write_trace_csv(c);
    write_region_images(c, c.trace.even_limit, c.trace.odd_limit);
}

void ensure_tuple(Ctx& c) {
    if (c.have_tuple) return;
    if (!c.have_sites) throw std::invalid_argument("analysis needs sites");
    if (!c.sc.tuple_voronoi.empty()) {
        const RegionTuple cells = voronoi_cells(c.sites, c.carrier);
        std::vector<Mask> comps = rasterize_sites(*c.carrier, c.sites);
        for (int k : c.sc.tuple_voronoi) {
            if (k < 1 || k > c.sites.count())
                throw std::invalid_argument("tuple voronoi index out of range");
            comps[k - 1] = cells.comp[k - 1];
        }
        c.tuple = make_region_tuple(c.carrier, c.sites, std::move(comps));
        c.tuple_origin = "voronoi components " +
                         std::to_string(c.sc.tuple_voronoi.size()) +
                         ", sites elsewhere";
        c.have_tuple = true;
        return;
    }
    if (!c.sc.tuple_regions.empty()) {
        if (static_cast<int>(c.sc.tuple_regions.size()) != c.sites.count())
            throw std::invalid_argument("tuple needs one region per site");
        std::vector<Mask> comps;
        for (const auto& reg : c.sc.tuple_regions) {
            Mask m(c.carrier->size(), 0);
            for (const Point& p : reg) {
                bool hit = false;
                for (std::size_t i = 0; i < c.carrier->size(); ++i)
                    if (norm_compare(c.carrier->norm(), c.carrier->point(i), p) == 0.0) {
                        m[i] = 1;
                        hit = true;
                    }
                if (!hit) throw std::invalid_argument("tuple region point off carrier");
            }
            comps.push_back(std::move(m));
        }
        c.tuple = make_region_tuple(c.carrier, c.sites, std::move(comps));
        c.tuple_origin = "explicit regions";
        c.have_tuple = true;
        return;
    }
    run_zone(c);
}

std::string containment_text(const ContainmentCheck& cc) {
    if (cc.holds) return "holds exactly";
    if (cc.up_to_discretization)
        return "holds up to discretization (" + std::to_string(cc.violations) +
               " boundary pixels)";
    return "fails (" + std::to_string(cc.violations) + " carrier points)";
}

void run_classify(Ctx& c) {
    ensure_tuple(c);
    const DiagramClass dc = classify(c.tuple);
    c.check("INFO", "classify.target", c.tuple_origin);
    c.check("INFO", "classify.territory", containment_text(dc.territory));
    c.check("INFO", "classify.double_territory", containment_text(dc.double_territory));
    c.check("INFO", "classify.zone", containment_text(dc.zone));
    c.check("INFO", "classify.double_zone", containment_text(dc.double_zone));
}

void run_neutral(Ctx& c) {
    if (c.sc.kind == WorldKind::GluedSegmentDisk) return;  // handled by glued path
    ensure_tuple(c);
    const DiagramClass dc = classify(c.tuple);
    const double allowance = static_cast<double>(dc.perimeter_allowance);

    auto report_kind = [&](DiagramKind kind, const char* label) {
        const NeutralZone nz = neutral_zone(c.tuple, kind);
        c.pass_fail(nz.neutral_count > 0,
                    std::string("neutral.nonempty.") + label,
                    std::to_string(nz.neutral_count) + " carrier points");
        std::size_t bad = 0;
        for (auto v : nz.shell_violations) bad += v;
        std::ostringstream os;
        os << "shell radii";
        for (double b : nz.shell_radius) os << " " << fmt(b);
        os << "; " << bad << " shell points outside the neutral set (allowance "
           << fmt(allowance) << ")";
        if (bad == 0) c.check("PASS", std::string("neutral.shells.") + label, os.str());
        else if (static_cast<double>(bad) <= allowance)
            c.check("UPTODISC", std::string("neutral.shells.") + label, os.str());
        else c.check("FAIL", std::string("neutral.shells.") + label, os.str());
    };

    const bool territory_ok = dc.territory.holds || dc.territory.up_to_discretization;
    const bool double_ok =
        dc.double_territory.holds || dc.double_territory.up_to_discretization;
    if (territory_ok) report_kind(DiagramKind::Territory, "territory");
    if (double_ok) report_kind(DiagramKind::DoubleTerritory, "double_territory");
    if (!territory_ok && !double_ok)
        c.check("INFO", "neutral.skipped", "tuple satisfies neither containment");
}

void run_separation(Ctx& c) {
    ensure_tuple(c);
    const DiagramClass dc = classify(c.tuple);
    auto report = [&](DiagramKind kind, const char* label) {
        for (const PairSeparation& s : separation_check(c.tuple, kind)) {
            std::ostringstream os;
            os << "d(R" << s.k + 1 << ",R" << s.j + 1 << ") = " << fmt(s.distance)
               << ", bound " << fmt(s.bound);
            c.pass_fail(s.pass, std::string("separation.") + label, os.str());
        }
    };
    if (dc.territory.holds || dc.territory.up_to_discretization)
        report(DiagramKind::Territory, "territory");
    if ((dc.double_territory.holds || dc.double_territory.up_to_discretization) &&
        c.space.geodesic())
        report(DiagramKind::DoubleTerritory, "double_territory");
}

void run_challenge(Ctx& c) {
    ensure_tuple(c);
    const Mask neutral = c.tuple.neutral_mask();
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < neutral.size(); ++i)
        if (neutral[i]) pool.push_back(i);
    if (pool.empty()) {
        c.check("INFO", "challenge.skipped", "no neutral carrier points to annex");
        return;
    }
    Rng rng(c.seed());
    const int trials = std::max(1, c.sc.challenges);
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
        const std::size_t pick = pool[rng.index(pool.size())];
        const int k = static_cast<int>(rng.index(c.tuple.count()));
        const ChallengeOutcome oc = challenge_enlargement(c.tuple, k, {pick});
        if (oc.violation) ++violations;
    }
    std::ostringstream os;
    os << violations << "/" << trials << " annexations leave a point the rivals reach first";
    if (c.space.geodesic())
        c.pass_fail(violations == trials, "challenge.all_violate", os.str());
    else
        c.check("INFO", "challenge.outcomes", os.str());
}

void run_voronoi_finite(Ctx& c) {
    const RegionTuple cells = voronoi_cells(c.sites, c.carrier);
    const std::size_t uncovered = uncovered_count(cells.comp, c.carrier->size());
    c.pass_fail(uncovered == 0, "voronoi.cover",
                std::to_string(uncovered) + " uncovered carrier points");
    if (c.grid && c.grid->dim() == 2)
        write_ppm(c.artifact("voronoi.ppm"), *c.grid, cells.comp, default_palette(),
                  "voronoi cells");
    std::ostringstream os;
    for (int k = 0; k < cells.count(); ++k)
        os << (k ? " " : "") << mask_count(cells.comp[k]);
    c.check("INFO", "voronoi.cell_sizes", os.str());
}

void run_voronoi_family(Ctx& c) {
    const auto fam = builtin_family(c.sc.family);
    const long kmax = c.sc.kmax;

    if (c.sc.family == BuiltinFamily::OrthonormalSpikes) {
        const Attainment at_origin = nearest_site_attainment(*fam, Point{}, kmax);
        c.pass_fail(at_origin.kind == Attainment::Kind::NotAttained &&
                        at_origin.inf_value == 1.0,
                    "attainment.origin",
                    "no nearest site at the origin, infimum 1");
        const Attainment at_e1 = nearest_site_attainment(*fam, Point{1.0}, kmax);
        c.pass_fail(at_e1.attained(), "attainment.e1", "nearest site exists at e_1");
        const auto rep = accumulation_consistency(
            *fam, fam->declared_accumulation_points(), fam->finitely_compact_space(),
            std::vector<Point>{Point{}, Point{1.0}, Point{0.5, 0.5}}, kmax);
        c.pass_fail(rep.consistent(), "attainment.accumulation",
                    "no accumulation point declared and the space is not finitely compact");
        return;
    }

    if (!c.grid) throw std::invalid_argument("family attainment mask needs a box world");
    const NeutralVoronoiMasks masks = neutral_voronoi_mask(*fam, *c.grid, kmax);
    const std::size_t neutral = mask_count(masks.neutral);
    const std::size_t undet = mask_count(masks.undetermined);
    c.check("INFO", "attainment.neutral_pixels", std::to_string(neutral));
    c.pass_fail(undet == 0, "attainment.settled",
                std::to_string(undet) + " undetermined pixels");

    if (c.sc.family == BuiltinFamily::ConvergingColumn) {
        std::size_t expected = 0;
        for (std::size_t i = 0; i < c.grid->count(); ++i)
            if (c.grid->point(i)[1] <= 0.0) ++expected;
        c.pass_fail(neutral == expected, "attainment.halfplane",
                    "neutral pixels " + std::to_string(neutral) + ", pixels with y <= 0 " +
                        std::to_string(expected));
    } else {
        c.pass_fail(neutral == 0, "attainment.none_neutral",
                    "every pixel has a nearest site");
    }

    std::vector<Point> probes;
    for (std::size_t i = 0; i < c.grid->count(); i += std::max<std::size_t>(1, c.grid->count() / 64))
        probes.push_back(c.grid->point(i));
    const auto rep = accumulation_consistency(*fam, fam->declared_accumulation_points(),
                                              fam->finitely_compact_space(), probes, kmax);
    c.pass_fail(rep.consistent(), "attainment.accumulation",
                rep.notes.empty() ? "verdicts agree with the declared accumulation points"
                                  : rep.notes.front());

    if (c.grid->dim() == 2) {
        Mask attained = mask_complement(mask_union(masks.neutral, masks.undetermined));
        write_ppm(c.artifact("attainment.ppm"), *c.grid,
                  {attained, masks.undetermined}, default_palette(),
                  "attained colored, neutral black");
    }
}

void run_measure(Ctx& c) {
    if (!c.have_sites) throw std::invalid_argument("measure analysis needs sites");
    if (!(c.sc.omega > 0.0) || !(c.sc.rho > 0.0)) {
        c.check("FAIL", "measure.params", "omega and rho must be set");
        return;
    }
    const ConcentrationReport rep =
        concentration_report(c.sites, *c.grid, c.sc.omega, c.sc.rho, c.max_iter());
    c.pass_fail(rep.converged, "measure.converged", "");
    if (!rep.converged) return;
    c.pass_fail(rep.double_zone_fixed, "measure.double_fixed_point",
                "converged iterate is a fixed point of the second power");
    if (!rep.interior_exists) {
        c.check("INFO", "measure.hypotheses", rep.note);
        return;
    }
    c.check("INFO", "measure.growth", "c = " + fmt(rep.growth));
    for (const auto& rc : rep.regions) {
        if (!rc.interior) continue;
        std::ostringstream os;
        os << "region " << rc.k << ": shell volume " << fmt(rc.shell_volume)
           << " vs required " << fmt(rc.required) << " (slack " << fmt(rc.slack)
           << ")";
        c.pass_fail(rc.pass, "measure.shell_volume", os.str());
        c.pass_fail(rc.ball_condition_ok, "measure.ball_condition",
                    "region " + std::to_string(rc.k) + ": measured covering radius " +
                        fmt(rc.rho_measured) + " < rho " + fmt(rep.rho));
    }
    {
        std::ostringstream os;
        os << "interior/(interior+neutral) = " << fmt(rep.ratio) << " vs bound "
           << fmt(rep.ratio_bound) << " + slack " << fmt(rep.ratio_slack);
        c.pass_fail(rep.ratio_pass, "measure.ratio", os.str());
    }

    std::ofstream mcsv(c.artifact("measure.csv"));
    mcsv << csv_header(c);
    mcsv << "key,value\n";
    mcsv << "m," << rep.m << "\nomega," << fmt(rep.omega) << "\nrho," << fmt(rep.rho)
         << "\nr_min," << fmt(rep.r_min) << "\ngrowth," << fmt(rep.growth)
         << "\nvol_interior," << fmt(rep.vol_interior) << "\nvol_neutral,"
         << fmt(rep.vol_neutral) << "\nratio," << fmt(rep.ratio) << "\nratio_bound,"
         << fmt(rep.ratio_bound) << "\n";
    for (const auto& rc : rep.regions)
        mcsv << "region" << rc.k << "_volume," << fmt(rc.volume) << "\nregion" << rc.k
             << "_margin," << fmt(rc.boundary_margin) << "\n";

    std::ofstream dcsv(c.artifact("decay.csv"));
    dcsv << csv_header(c);
    dcsv << "m,bound\n";
    for (const auto& [m, bound] : decay_table(rep.growth))
        dcsv << m << "," << fmt(bound) << "\n";
}

void run_density(Ctx& c) {
    if (!c.have_sites) throw std::invalid_argument("density analysis needs sites");
    if (!(c.sc.omega > 0.0)) {
        c.check("FAIL", "density.params", "omega must be set");
        return;
    }
    const DensityReport rep = density_check(c.sites, *c.grid, c.sc.omega);
    c.pass_fail(rep.margin_ok, "density.deep_point",
                "margin " + fmt(rep.deep_margin) + " vs required " +
                    fmt((8.0 / 3.0) * rep.omega));
    c.pass_fail(rep.covering_ok, "density.covering",
                "max gap to sites " + fmt(rep.max_site_gap) + " vs required " +
                    fmt((2.0 / 3.0) * rep.omega));
    if (rep.margin_ok && rep.covering_ok)
        c.pass_fail(rep.cell_margin_ok, "density.interior_cell",
                    "site " + std::to_string(rep.interior_site) + " cell margin " +
                        fmt(rep.cell_margin) + " >= " + fmt(rep.omega));
}

void run_glued(Ctx& c) {
    const GluedExampleReport rep = verify_glued_zone_example(1000);
    c.pass_fail(rep.is_zone(), "glued.zone",
                std::to_string(rep.zone_violations) + " dominance mismatches over " +
                    std::to_string(rep.samples) + " samples");
    c.pass_fail(rep.neutral_matches(), "glued.neutral",
                "neutral set is the open segment between heights -1 and 1");
}

// exact finite-world battery behind the discrete_counterexamples scenario
void run_discrete_suite(Ctx& c) {
    // three-point world
    const Space w3 = Space::finite_points({{-1.0}, {0.0}, {1.0}}, Norm::L2);
    auto carrier3 = std::make_shared<FiniteCarrier>(w3);
    SiteTuple sites3(w3, {{{-1.0}}, {{1.0}}});

    auto mask_of = [&](std::shared_ptr<const Carrier> car,
                       std::vector<double> coords) {
        Mask m(car->size(), 0);
        for (double v : coords)
            for (std::size_t i = 0; i < car->size(); ++i)
                if (car->point(i)[0] == v) m[i] = 1;
        return m;
    };

    {
        RegionTuple r = make_region_tuple(
            carrier3, sites3,
            {mask_of(carrier3, {-1.0, 0.0}), mask_of(carrier3, {0.0, 1.0})});
        const RegionTuple d = dom_step(r);
        const bool ok = d.comp[0] == mask_of(carrier3, {-1.0}) &&
                        d.comp[1] == mask_of(carrier3, {1.0});
        c.pass_fail(ok, "discrete.dom_retracts",
                    "dom of ({-1,0},{0,1}) is ({-1},{1}) exactly");
        const DiagramClass dc = classify(r);
        c.pass_fail(!dc.territory.holds && dc.double_territory.holds &&
                        dc.double_zone.holds,
                    "discrete.double_territory_not_territory", "");
    }
    {
        RegionTuple r = make_region_tuple(
            carrier3, sites3,
            {mask_of(carrier3, {-1.0}), mask_of(carrier3, {0.0, 1.0})});
        const DiagramClass dc = classify(r);
        c.pass_fail(dc.zone.holds && dc.territory.holds && dc.double_zone.holds,
                    "discrete.zone_diagram", "({-1},{0,1}) is a zone diagram");
        const ChallengeOutcome oc = challenge_enlargement(
            r, 0, {1});  // annex the middle point (carrier index 1)
        c.pass_fail(!oc.violation, "discrete.challenge_no_violation",
                    "annexing 0 leaves d(0,P_1) = d(0,{1}) = 1, no violation");
        bool threw = false;
        try {
            neutral_zone(r, DiagramKind::Territory);
        } catch (const std::domain_error&) {
            threw = true;
        }
        c.pass_fail(threw, "discrete.neutral_requires_geodesic",
                    "neutral-zone precondition rejects the discrete world");
        for (const PairSeparation& s : separation_check(r, DiagramKind::Territory))
            c.pass_fail(s.pass, "discrete.separation",
                        "d = " + fmt(s.distance) + ", bound " + fmt(s.bound));
    }
    {
        const IterationTrace tr = iterate_dom(sites3, carrier3, 64);
        const bool even_ok = tr.even_limit.comp[0] == mask_of(carrier3, {-1.0}) &&
                             tr.even_limit.comp[1] == mask_of(carrier3, {1.0});
        const bool odd_ok = tr.odd_limit.comp[0] == mask_of(carrier3, {-1.0, 0.0}) &&
                            tr.odd_limit.comp[1] == mask_of(carrier3, {0.0, 1.0});
        c.pass_fail(tr.converged && even_ok && odd_ok, "discrete.iterate_limits",
                    "limits ({-1},{1}) and ({-1,0},{0,1})");
        const DiagramClass odd_class = classify(tr.odd_limit);
        c.pass_fail(odd_class.double_zone.holds && !odd_class.territory.holds,
                    "discrete.odd_limit_double_zone", "");
    }

    // dyadic interval world [-1,1], pitch 1/4: breakpoints land on pixels
    const Space w9 = Space::box({-1.0}, {1.0}, Norm::L2);
    auto carrier9 = std::make_shared<GridCarrier>(w9, Grid({-1.0}, {1.0}, {9}));
    SiteTuple sites9(w9, {{{-1.0}}, {{1.0}}});
    auto interval_mask = [&](double a, double b) {
        Mask m(carrier9->size(), 0);
        for (std::size_t i = 0; i < carrier9->size(); ++i) {
            const double x = carrier9->point(i)[0];
            if (x >= a && x <= b) m[i] = 1;
        }
        return m;
    };
    {
        RegionTuple r = make_region_tuple(
            carrier9, sites9, {interval_mask(-1.0, 0.0), interval_mask(1.0, 1.0)});
        const RegionTuple d1 = dom_step(r);
        const bool ok1 = d1.comp[0] == interval_mask(-1.0, 0.0) &&
                         d1.comp[1] == interval_mask(0.5, 1.0);
        c.pass_fail(ok1, "discrete.interval_dom",
                    "dom of ([-1,0],{1}) is ([-1,0],[0.5,1]) exactly");
        const RegionTuple d2 = dom_step(d1);
        const bool ok2 = d2.comp[0] == interval_mask(-1.0, -0.25) &&
                         d2.comp[1] == interval_mask(0.5, 1.0);
        c.pass_fail(ok2, "discrete.interval_dom2",
                    "second power is ([-1,-0.25],[0.5,1]) exactly");
        const DiagramClass dc = classify(r);
        c.pass_fail(dc.territory.holds && !dc.double_territory.holds,
                    "discrete.territory_not_double", "");
    }
}

}  // namespace

RunResult run_scenario(const Scenario& scenario, const RunOverrides& overrides,
                       std::ostream& log) {
    Ctx c(scenario, overrides, log);

    std::string out = overrides.out_dir;
    if (out.empty()) out = scenario.out_dir;
    if (out.empty())
        out = (fs::path("out") / (scenario.name.empty() ? "scenario" : scenario.name))
                  .string();
    c.result.out_dir = out;
    fs::create_directories(out);

    setup_world(c);

    if (scenario.kind == WorldKind::GluedSegmentDisk) {
        run_glued(c);
    } else if (scenario.suite == "discrete") {
        run_discrete_suite(c);
    } else {
        for (Analysis a : scenario.analyses) {
            switch (a) {
                case Analysis::Voronoi:
                    if (scenario.has_family) run_voronoi_family(c);
                    else run_voronoi_finite(c);
                    break;
                case Analysis::Zone: run_zone(c); break;
                case Analysis::Classify: run_classify(c); break;
                case Analysis::Neutral: run_neutral(c); break;
                case Analysis::Separation: run_separation(c); break;
                case Analysis::Challenge: run_challenge(c); break;
                case Analysis::Measure: run_measure(c); break;
                case Analysis::Density: run_density(c); break;
            }
        }
    }

    std::ofstream report((fs::path(out) / "checks.txt").string());
    for (const auto& line : c.result.checks)
        report << line.status << " " << line.name
               << (line.details.empty() ? "" : "  ") << line.details << "\n";
    return std::move(c.result);
}

}  // namespace zd
