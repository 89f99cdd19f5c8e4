#include "zonediag/zone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zd {

namespace {

// component masks from precomputed per-site own-distance fields
std::vector<Mask> dom_components(const RegionTuple& r,
                                 const std::vector<std::vector<double>>& site_fields) {
    const int k = r.count();
    const std::size_t n = r.carrier->size();

    std::vector<std::vector<double>> fields(k);
    for (int i = 0; i < k; ++i) fields[i] = r.carrier->mask_field(r.comp[i]);

    // rival[i] = elementwise min over j != i, by prefix/suffix running minima
    std::vector<std::vector<double>> rival(k);
    std::vector<double> run(n, kInf);
    for (int i = 0; i < k; ++i) {
        rival[i] = run;
        for (std::size_t p = 0; p < n; ++p) run[p] = std::min(run[p], fields[i][p]);
    }
    run.assign(n, kInf);
    for (int i = k - 1; i >= 0; --i) {
        for (std::size_t p = 0; p < n; ++p)
            rival[i][p] = std::min(rival[i][p], run[p]);
        for (std::size_t p = 0; p < n; ++p) run[p] = std::min(run[p], fields[i][p]);
    }

    std::vector<Mask> out(k);
    for (int i = 0; i < k; ++i) {
        Mask m(n, 0);
        const auto& own = site_fields[i];
        for (std::size_t p = 0; p < n; ++p) m[p] = own[p] <= rival[i][p] ? 1 : 0;
        out[i] = std::move(m);
    }
    return out;
}

std::vector<std::vector<double>> own_site_fields(const RegionTuple& r) {
    std::vector<std::vector<double>> f(r.count());
    for (int i = 0; i < r.count(); ++i) f[i] = r.carrier->site_field(r.sites.sites[i]);
    return f;
}

std::size_t count_not_in(const Mask& a, const Mask& b) {  // |a \ b|
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) ++c;
    return c;
}

std::size_t perimeter_allowance_of(const RegionTuple& r) {
    const Grid* g = r.carrier->grid();
    if (!g) return 0;
    std::size_t c = 0;
    for (const Mask& m : r.comp) c += surface_pixel_count(*g, m);
    return c;
}

}  // namespace

RegionTuple dom_step(const RegionTuple& r) {
    RegionTuple out;
    out.carrier = r.carrier;
    out.sites = r.sites;
    out.comp = dom_components(r, own_site_fields(r));
    return out;
}

IterationTrace iterate_dom(const SiteTuple& sites,
                           std::shared_ptr<const Carrier> carrier, int max_iter) {
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    sites.validate();

    IterationTrace tr;
    tr.sandwich_ok = true;

    RegionTuple cur = make_region_tuple(carrier, sites, rasterize_sites(*carrier, sites));
    const auto site_fields = own_site_fields(cur);

    auto record = [&](int step, const RegionTuple& t) {
        IterationStep s;
        s.step = step;
        for (const Mask& m : t.comp) s.comp_count.push_back(mask_count(m));
        s.neutral_count = t.carrier->size() - mask_count(t.covered());
        tr.steps.push_back(std::move(s));
    };

    record(0, cur);
    RegionTuple prev;   // step t-1
    RegionTuple prev2;  // step t-2

    for (int t = 1; t <= max_iter; ++t) {
        RegionTuple next;
        next.carrier = carrier;
        next.sites = sites;
        next.comp = dom_components(cur, site_fields);
        record(t, next);

        if (t >= 2) {
            const bool even = (t % 2) == 0;
            // evens only grow, odds only shrink, evens stay below odds
            if (even) {
                if (!componentwise_subset(prev, next)) tr.sandwich_ok = false;   // t-2 grows
                if (!componentwise_subset(next, cur)) tr.sandwich_ok = false;    // below odd t-1
            } else {
                if (!componentwise_subset(next, prev)) tr.sandwich_ok = false;   // t-2 shrinks
                if (!componentwise_subset(cur, next)) tr.sandwich_ok = false;    // even t-1 below
            }
        }

        if (t >= 3 && same_components(next, prev) && same_components(cur, prev2)) {
            tr.converged = true;
            tr.stabilized_at = t;
            if (t % 2 == 0) {
                tr.even_limit = next;
                tr.odd_limit = cur;
            } else {
                tr.even_limit = cur;
                tr.odd_limit = next;
            }
            break;
        }

        prev2 = std::move(prev);
        prev = std::move(cur);
        cur = std::move(next);
    }

    if (!tr.converged) {
        // hand back the latest pair without pretending it stabilized
        if (tr.steps.back().step % 2 == 0) {
            tr.even_limit = cur;
            tr.odd_limit = prev.comp.empty() ? cur : prev;
        } else {
            tr.even_limit = prev.comp.empty() ? cur : prev;
            tr.odd_limit = cur;
        }
    } else {
        if (!componentwise_subset(tr.even_limit, tr.odd_limit)) tr.sandwich_ok = false;
        tr.unique_zone = same_components(tr.even_limit, tr.odd_limit);
    }
    return tr;
}

DiagramClass classify(const RegionTuple& r) {
    const RegionTuple d1 = dom_step(r);
    const RegionTuple d2 = dom_step(d1);

    DiagramClass out;
    out.slack = r.carrier->slack();
    out.perimeter_allowance = perimeter_allowance_of(r);

    auto containment = [&](const RegionTuple& image) {
        ContainmentCheck c;
        for (int k = 0; k < r.count(); ++k) c.violations += count_not_in(r.comp[k], image.comp[k]);
        c.holds = c.violations == 0;
        c.up_to_discretization = c.violations <= out.perimeter_allowance;
        return c;
    };
    auto equality = [&](const RegionTuple& image) {
        ContainmentCheck c;
        for (int k = 0; k < r.count(); ++k) {
            c.violations += count_not_in(r.comp[k], image.comp[k]);
            c.violations += count_not_in(image.comp[k], r.comp[k]);
        }
        c.holds = c.violations == 0;
        c.up_to_discretization = c.violations <= out.perimeter_allowance;
        return c;
    };

    out.territory = containment(d1);
    out.double_territory = containment(d2);
    out.zone = equality(d1);
    out.double_zone = equality(d2);
    return out;
}

static std::vector<double> checked_radii(const RegionTuple& r, const char* who) {
    auto radii = separation_radii(r.sites);
    if (!radii_positive(radii))
        throw std::domain_error(std::string(who) +
                                ": requires positive separation radii "
                                "r_k = inf{d(P_k,P_j) : j != k}; a tuple with "
                                "touching sites admits gap-free diagrams");
    return radii;
}

NeutralZone neutral_zone(const RegionTuple& r, DiagramKind kind) {
    const auto radii = checked_radii(r, "neutral_zone");
    if (!r.carrier->space().geodesic())
        throw std::domain_error(
            "neutral_zone: requires a geodesic space; discrete worlds admit "
            "gap-free zone diagrams");

    const int k = r.count();
    NeutralZone nz;
    nz.neutral = r.neutral_mask();
    nz.neutral_count = mask_count(nz.neutral);
    nz.perimeter_allowance = perimeter_allowance_of(r);
    nz.shell_radius.resize(k);
    nz.shells.resize(k);
    nz.shell_violations.assign(k, 0);

    for (int i = 0; i < k; ++i) {
        if (kind == DiagramKind::Territory) {
            nz.shell_radius[i] = radii[i] / 3.0;
        } else {
            double other = kInf;
            for (int j = 0; j < k; ++j)
                if (j != i) other = std::min(other, radii[j]);
            nz.shell_radius[i] = (radii[i] + other) / 8.0;
        }
        const auto field = r.carrier->mask_field(r.comp[i]);
        const double cutoff = r.carrier->to_compare(nz.shell_radius[i]);
        Mask shell(r.carrier->size(), 0);
        for (std::size_t p = 0; p < shell.size(); ++p)
            shell[p] = (!r.comp[i][p] && field[p] < cutoff) ? 1 : 0;
        for (std::size_t p = 0; p < shell.size(); ++p)
            if (shell[p] && !nz.neutral[p]) ++nz.shell_violations[i];
        nz.shells[i] = std::move(shell);
    }
    return nz;
}

std::vector<PairSeparation> separation_check(const RegionTuple& r, DiagramKind kind) {
    const auto radii = checked_radii(r, "separation_check");
    if (kind == DiagramKind::DoubleTerritory && !r.carrier->space().geodesic())
        throw std::domain_error(
            "separation_check: the double-territory bound needs a geodesic space");

    const int k = r.count();
    const double slack = r.carrier->slack();
    std::vector<PairSeparation> out;
    std::vector<std::vector<double>> fields(k);
    for (int i = 0; i < k; ++i) fields[i] = r.carrier->mask_field(r.comp[i]);

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            double best = kInf;
            for (std::size_t p = 0; p < r.comp[i].size(); ++p)
                if (r.comp[i][p]) best = std::min(best, fields[j][p]);
            PairSeparation s;
            s.k = i;
            s.j = j;
            s.distance = r.carrier->to_metric(best);
            s.bound = kind == DiagramKind::Territory
                          ? std::max(radii[i], radii[j]) / 3.0
                          : radii[i] / 8.0 + radii[j] / 8.0;
            s.pass = s.distance >= s.bound - 2.0 * slack;
            out.push_back(s);
        }
    return out;
}

ChallengeOutcome challenge_enlargement(const RegionTuple& r, int k,
                                       const std::vector<std::size_t>& annexed) {
    if (k < 0 || k >= r.count()) throw std::invalid_argument("component index out of range");
    if (annexed.empty()) throw std::invalid_argument("challenge set must be nonempty");
    for (std::size_t a : annexed) {
        if (a >= r.carrier->size()) throw std::invalid_argument("carrier index out of range");
        if (r.comp[k][a])
            throw std::domain_error(
                "challenge_enlargement: annexed set must be disjoint from R_k");
        const Point x = r.carrier->point(a);
        for (int j = 0; j < r.count(); ++j) {
            if (j == k) continue;
            for (const Point& p : r.sites.sites[j])
                if (norm_compare(r.carrier->norm(), x, p) == 0.0)
                    throw std::domain_error(
                        "challenge_enlargement: annexed set must avoid rival sites");
        }
    }

    // rivals lose the annexed points
    Mask rival_union(r.carrier->size(), 0);
    for (int j = 0; j < r.count(); ++j) {
        if (j == k) continue;
        for (std::size_t p = 0; p < rival_union.size(); ++p)
            rival_union[p] |= r.comp[j][p];
    }
    for (std::size_t a : annexed) rival_union[a] = 0;

    const auto rival_field = r.carrier->mask_field(rival_union);
    ChallengeOutcome out;
    for (std::size_t a : annexed) {
        const Point x = r.carrier->point(a);
        double own = kInf;
        for (const Point& p : r.sites.sites[k])
            own = std::min(own, norm_compare(r.carrier->norm(), x, p));
        if (own > rival_field[a]) {
            out.violation = true;
            out.witness = a;
            out.defender_distance = r.carrier->to_metric(own);
            out.rival_distance = r.carrier->to_metric(rival_field[a]);
            return out;
        }
    }
    return out;
}

GluedExampleReport verify_glued_zone_example(int min_samples) {
    GluedExampleReport rep;
    const Point p1{0.0, 3.0}, p2{0.0, -3.0};
    const Space sp = Space::glued_segment_disk();

    auto check = [&](const Point& x) {
        ++rep.samples;
        const bool seg = glued::on_segment(x);
        const double y = x[1];
        const bool in_r1 = seg && y >= 1.0 && y <= 3.0;
        const bool in_r2 = glued::in_disk(x) || (seg && y >= -2.0 && y <= -1.0);
        const bool expected_neutral = seg && y > -1.0 && y < 1.0;

        const double d_p1 = distance(sp, x, p1);
        const double d_p2 = distance(sp, x, p2);
        const double d_r1 = glued::dist_to_segment_piece(x, 1.0, 3.0);
        const double d_r2 = std::min(glued::dist_to_disk(x),
                                     glued::dist_to_segment_piece(x, -2.0, -1.0));

        if (in_r1 != (d_p1 <= d_r2)) ++rep.zone_violations;
        if (in_r2 != (d_p2 <= d_r1)) ++rep.zone_violations;
        if ((!in_r1 && !in_r2) != expected_neutral) ++rep.neutral_mismatches;
    };

    // segment samples at dyadic heights, endpoints and knife edges included
    const int seg_n = std::max(641, min_samples * 2 / 3);
    for (int i = 0; i < seg_n; ++i) {
        const double y = -2.0 + 5.0 * static_cast<double>(i) / static_cast<double>(seg_n - 1);
        check(Point{0.0, y});
    }
    for (double y : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0}) check(Point{0.0, y});

    // disk samples on concentric rings, plus center and junction
    const int rings = 5, per_ring = std::max(96, min_samples / 8);
    for (int ri = 1; ri <= rings; ++ri) {
        const double rad = glued::kDiskRadius * static_cast<double>(ri) / rings;
        for (int a = 0; a < per_ring; ++a) {
            const double ang = 2.0 * std::numbers::pi * a / per_ring;
            check(Point{glued::kDiskCenter[0] + rad * std::cos(ang),
                        glued::kDiskCenter[1] + rad * std::sin(ang)});
        }
    }
    check(glued::kDiskCenter);
    check(glued::kJunction);
    check(Point{0.0, -4.0});
    return rep;
}

}  // namespace zd
