#include "zonediag/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zonediag/voronoi.hpp"

namespace zd {

namespace {

double box_exit_t(const Space& box, const Point& p, const Point& theta) {
    double t = kInf;
    for (std::size_t a = 0; a < p.size(); ++a) {
        if (theta[a] > 0.0) t = std::min(t, (box.hi[a] - p[a]) / theta[a]);
        else if (theta[a] < 0.0) t = std::min(t, (box.lo[a] - p[a]) / theta[a]);
    }
    return t;
}

double min_metric_distance(Norm n, const Point& x, std::span<const Point> pts) {
    double best = kInf;
    for (const Point& p : pts) best = std::min(best, norm_distance(n, x, p));
    return best;
}

}  // namespace

double ray_dominance_extent(const Space& box, const Point& p, const Point& theta,
                            std::span<const Point> a, double t_max) {
    if (box.kind != WorldKind::Box)
        throw unsupported_error("ray_dominance_extent: box worlds only");
    if (a.empty()) throw std::invalid_argument("ray_dominance_extent: empty rival set");
    if (!box.contains(p)) throw std::domain_error("ray_dominance_extent: p outside world");
    if (!(min_metric_distance(box.norm, p, a) > 0.0))
        throw std::domain_error("ray_dominance_extent: p lies in the rival set");

    const double step_norm = norm_distance(box.norm, theta, Point(theta.size(), 0.0));
    const double cap = std::min(t_max, box_exit_t(box, p, theta));

    Point x(p.size());
    auto feasible = [&](double t) {
        for (std::size_t i = 0; i < p.size(); ++i) x[i] = p[i] + t * theta[i];
        return t * step_norm <= min_metric_distance(box.norm, x, a);
    };

    if (feasible(cap)) return cap;
    double lo = 0.0, hi = cap;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid)) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

RadialProfile sample_dominance_profile(const Space& box, const Point& p,
                                       std::span<const Point> a, long n_dirs,
                                       double t_max, Rng& rng) {
    RadialProfile prof;
    prof.m = static_cast<int>(p.size());
    prof.center = p;
    prof.clip = t_max;
    prof.reach.reserve(n_dirs);
    for (long i = 0; i < n_dirs; ++i) {
        const Point theta = rng.unit_vector(prof.m);
        prof.reach.push_back(ray_dominance_extent(box, p, theta, a, t_max));
    }
    return prof;
}

double sphere_surface_area(int m) {
    return 2.0 * std::pow(std::numbers::pi, m / 2.0) / std::tgamma(m / 2.0);
}

VolumeEstimate radial_volume(const RadialProfile& profile) {
    const long n = static_cast<long>(profile.reach.size());
    if (n < 1000)
        throw std::invalid_argument("radial_volume: need at least 1000 directions");
    if (profile.m < 2)
        throw std::invalid_argument("radial_volume: dimension must be >= 2");

    std::vector<double> powered(profile.reach.size());
    for (std::size_t i = 0; i < powered.size(); ++i)
        powered[i] = std::pow(profile.reach[i], profile.m);

    const double surface = sphere_surface_area(profile.m);
    const double mean = pairwise_sum(powered) / static_cast<double>(n);

    std::vector<double> sq(powered.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
        const double d = powered[i] - mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / static_cast<double>(n - 1);

    VolumeEstimate est;
    est.samples = n;
    est.value = surface * mean / static_cast<double>(profile.m);
    est.std_error = surface / static_cast<double>(profile.m) *
                    std::sqrt(var / static_cast<double>(n));
    return est;
}

namespace {

double boundary_margin_of_point(const Grid& g, const Point& x) {
    double m = kInf;
    for (int a = 0; a < g.dim(); ++a)
        m = std::min(m, std::min(x[a] - g.lo[a], g.hi[a] - x[a]));
    return m;
}

}  // namespace

ConcentrationReport concentration_report(const SiteTuple& sites, const Grid& g,
                                         double omega, double rho, int max_iter) {
    if (g.dim() < 2) throw std::invalid_argument("concentration: dimension must be >= 2");
    if (!(omega > 0.0) || !(rho > 0.0))
        throw std::invalid_argument("concentration: omega and rho must be positive");

    ConcentrationReport rep;
    rep.m = g.dim();
    rep.omega = omega;
    rep.rho = rho;
    rep.radii = separation_radii(sites);
    if (!radii_positive(rep.radii)) {
        rep.note = "separation radii must be positive";
        return rep;
    }
    rep.r_min = *std::min_element(rep.radii.begin(), rep.radii.end());
    rep.growth = growth_factor(rep.r_min, rho, omega);

    auto carrier = std::make_shared<GridCarrier>(
        Space::box(g.lo, g.hi, sites.space.norm), g);
    const IterationTrace tr = iterate_dom(sites, carrier, max_iter);
    rep.converged = tr.converged;
    if (!tr.converged) {
        rep.note = "iteration did not stabilize within max_iter";
        return rep;
    }
    const RegionTuple& r = tr.even_limit;
    {
        const RegionTuple d2 = dom_step(dom_step(r));
        rep.double_zone_fixed = same_components(r, d2);
        rep.zone_fixed = tr.unique_zone;
    }

    const int k = r.count();
    const std::size_t n = carrier->size();
    double pixvol = 1.0;
    for (int a = 0; a < g.dim(); ++a) pixvol *= g.pitch(a);

    const Mask neutral = r.neutral_mask();
    rep.vol_neutral = static_cast<double>(mask_count(neutral)) * pixvol;

    const double cm = std::pow(rep.growth, rep.m);

    for (int i = 0; i < k; ++i) {
        RegionConcentration rc;
        rc.k = i + 1;
        rc.volume = static_cast<double>(mask_count(r.comp[i])) * pixvol;

        double margin = kInf;
        for (std::size_t p = 0; p < n; ++p)
            if (r.comp[i][p]) margin = std::min(margin, boundary_margin_of_point(g, g.point(p)));
        rc.boundary_margin = margin;
        rc.interior = margin >= omega;

        if (rc.interior) {
            // ball condition for the rival sites, measured on the grid
            std::vector<Point> rivals;
            for (int j = 0; j < k; ++j)
                if (j != i)
                    rivals.insert(rivals.end(), sites.sites[j].begin(), sites.sites[j].end());
            const auto f = point_distance_field(g, rivals, sites.space.norm);
            double worst = 0.0;
            for (double v : f) worst = std::max(worst, v);
            rc.rho_measured = compare_to_metric(sites.space.norm, worst);
            rc.ball_condition_ok = rc.rho_measured < rho;

            rc.shell_thickness = std::min(rep.radii[i] / 32.0, omega);
            const auto field = carrier->mask_field(r.comp[i]);
            const double cutoff = carrier->to_compare(rc.shell_thickness);
            Mask shell(n, 0);
            for (std::size_t p = 0; p < n; ++p)
                shell[p] = (neutral[p] && field[p] <= cutoff) ? 1 : 0;
            rc.shell_volume = static_cast<double>(mask_count(shell)) * pixvol;
            rc.required = (cm - 1.0) * rc.volume;
            rc.slack = static_cast<double>(surface_pixel_count(g, r.comp[i]) +
                                           surface_pixel_count(g, shell)) *
                       pixvol;
            rc.pass = rc.shell_volume >= rc.required - rc.slack;
            rep.vol_interior += rc.volume;
        }
        rep.regions.push_back(rc);
    }

    rep.interior_exists =
        std::any_of(rep.regions.begin(), rep.regions.end(),
                    [](const RegionConcentration& rc) { return rc.interior; });
    if (!rep.interior_exists) {
        rep.note = "no interior region; concentration hypotheses unmet";
        return rep;
    }

    rep.shells_pass = true;
    for (const auto& rc : rep.regions)
        if (rc.interior && !(rc.pass && rc.ball_condition_ok)) rep.shells_pass = false;

    Mask interior_union(n, 0);
    for (int i = 0; i < k; ++i)
        if (rep.regions[i].interior)
            for (std::size_t p = 0; p < n; ++p) interior_union[p] |= r.comp[i][p];

    rep.ratio = rep.vol_interior / (rep.vol_interior + rep.vol_neutral);
    rep.ratio_bound = std::pow(rep.growth, -rep.m);
    rep.ratio_slack = static_cast<double>(surface_pixel_count(g, interior_union)) *
                      pixvol / (rep.vol_interior + rep.vol_neutral);
    rep.ratio_pass = rep.ratio <= rep.ratio_bound + rep.ratio_slack;
    return rep;
}

std::vector<std::pair<int, double>> decay_table(double growth, int m_from, int m_to) {
    std::vector<std::pair<int, double>> t;
    for (int m = m_from; m <= m_to; ++m)
        t.emplace_back(m, std::pow(growth, -m));
    return t;
}

DensityReport density_check(const SiteTuple& sites, const Grid& g, double omega) {
    if (sites.space.kind != WorldKind::Box)
        throw unsupported_error("density_check: box worlds only");
    DensityReport rep;
    rep.omega = omega;

    rep.deep_point.resize(g.dim());
    for (int a = 0; a < g.dim(); ++a) rep.deep_point[a] = 0.5 * (g.lo[a] + g.hi[a]);
    rep.deep_margin = boundary_margin_of_point(g, rep.deep_point);
    rep.margin_ok = rep.deep_margin >= (8.0 / 3.0) * omega;

    std::vector<Point> all;
    for (const auto& s : sites.sites) all.insert(all.end(), s.begin(), s.end());
    const auto f = point_distance_field(g, all, sites.space.norm);
    double worst = 0.0;
    for (double v : f) worst = std::max(worst, v);
    rep.max_site_gap = compare_to_metric(sites.space.norm, worst);
    rep.covering_ok = rep.max_site_gap < (2.0 / 3.0) * omega;

    if (rep.margin_ok && rep.covering_ok) {
        // nearest site to the deep point owns a cell with margin >= omega
        int best = -1;
        double bd = kInf;
        for (int i = 0; i < sites.count(); ++i)
            for (const Point& p : sites.sites[i]) {
                const double d = norm_distance(sites.space.norm, rep.deep_point, p);
                if (d < bd) {
                    bd = d;
                    best = i;
                }
            }
        rep.interior_site = best + 1;

        auto carrier = std::make_shared<GridCarrier>(
            Space::box(g.lo, g.hi, sites.space.norm), g);
        const RegionTuple cells = voronoi_cells(sites, carrier);
        double margin = kInf;
        for (std::size_t p = 0; p < carrier->size(); ++p)
            if (cells.comp[best][p])
                margin = std::min(margin, boundary_margin_of_point(g, g.point(p)));
        rep.cell_margin = margin;
        rep.cell_margin_ok = margin >= omega;
    }
    rep.pass = rep.margin_ok && rep.covering_ok && rep.cell_margin_ok;
    return rep;
}

}  // namespace zd
