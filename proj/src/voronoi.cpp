#include "zonediag/voronoi.hpp"

#include <algorithm>

namespace zd {

Attainment nearest_site_attainment(const SiteFamily& fam, const Point& x, long k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");

    if (fam.certificate() == CertificateKind::StrictlyDecreasing &&
        fam.certificate_covers(x)) {
        Attainment a;
        a.kind = Attainment::Kind::NotAttained;
        a.inf_value = fam.certified_inf(x);
        return a;
    }

    Attainment a;
    for (long k = 1; k <= k_max; ++k) {
        const double d = fam.profile(x, k);
        if (d < a.distance) {
            a.distance = d;
            a.index = k;
        }
    }
    a.tail_bound = fam.tail_inf(x, k_max);
    a.kind = a.distance <= a.tail_bound ? Attainment::Kind::Attained
                                        : Attainment::Kind::Undetermined;
    return a;
}

Attainment nearest_site_attainment(const SiteTuple& tuple, const Point& x) {
    Attainment a;
    a.kind = Attainment::Kind::Attained;
    for (int k = 0; k < tuple.count(); ++k) {
        double d = kInf;
        for (const Point& p : tuple.sites[k]) {
            const double v = tuple.space.kind == WorldKind::GluedSegmentDisk
                                 ? distance(tuple.space, x, p)
                                 : norm_distance(tuple.space.norm, x, p);
            d = std::min(d, v);
        }
        if (d < a.distance) {
            a.distance = d;
            a.index = k + 1;
        }
    }
    return a;
}

bool in_dom(const Space& s, std::span<const Point> p, std::span<const Point> a,
            const Point& x) {
    if (p.empty()) throw std::invalid_argument("in_dom: P must be nonempty");
    double dp = kInf;
    for (const Point& q : p) dp = std::min(dp, distance(s, x, q));
    double da = kInf;
    for (const Point& q : a) da = std::min(da, distance(s, x, q));
    return dp <= da;
}

RegionTuple voronoi_cells(const SiteTuple& sites,
                          std::shared_ptr<const Carrier> carrier) {
    sites.validate();
    const int k = sites.count();
    const std::size_t n = carrier->size();

    std::vector<std::vector<double>> own(k);
    for (int i = 0; i < k; ++i) own[i] = carrier->site_field(sites.sites[i]);

    std::vector<Mask> cells(k, Mask(n, 0));
    for (std::size_t p = 0; p < n; ++p) {
        double best = kInf;
        for (int i = 0; i < k; ++i) best = std::min(best, own[i][p]);
        for (int i = 0; i < k; ++i)
            if (own[i][p] == best) cells[i][p] = 1;
    }
    return make_region_tuple(std::move(carrier), sites, std::move(cells));
}

NeutralVoronoiMasks neutral_voronoi_mask(const SiteFamily& fam, const Grid& g,
                                         long k_max) {
    if (fam.dim() != 0 && fam.dim() != g.dim())
        throw std::invalid_argument("family/grid dimension mismatch");
    NeutralVoronoiMasks out;
    out.neutral.assign(g.count(), 0);
    out.undetermined.assign(g.count(), 0);
    for (std::size_t i = 0; i < g.count(); ++i) {
        const Attainment a = nearest_site_attainment(fam, g.point(i), k_max);
        if (a.kind == Attainment::Kind::NotAttained) out.neutral[i] = 1;
        else if (a.kind == Attainment::Kind::Undetermined) out.undetermined[i] = 1;
    }
    return out;
}

AccumulationReport accumulation_consistency(const SiteFamily& fam,
                                            const std::vector<Point>& declared,
                                            bool finitely_compact,
                                            std::span<const Point> samples,
                                            long k_max) {
    AccumulationReport rep;
    rep.finitely_compact = finitely_compact;

    for (const Point& x : samples) {
        const Attainment a = nearest_site_attainment(fam, x, k_max);
        switch (a.kind) {
            case Attainment::Kind::Attained: ++rep.attained; break;
            case Attainment::Kind::NotAttained: ++rep.not_attained; break;
            case Attainment::Kind::Undetermined: ++rep.undetermined; break;
        }
    }
    if (rep.not_attained > 0 && declared.empty() && finitely_compact) {
        rep.missing_accumulation_point = true;
        rep.notes.push_back(
            "finitely compact space with non-attained samples requires an "
            "accumulation point of the site union, none declared");
    }
    for (const Point& y : declared) {
        const Attainment a = nearest_site_attainment(fam, y, k_max);
        if (a.kind == Attainment::Kind::Attained && a.distance > 0.0) {
            rep.declared_point_attained = true;
            rep.notes.push_back(
                "declared accumulation point has a nearest site at positive "
                "distance, so it cannot be an accumulation point");
        }
    }
    return rep;
}

}  // namespace zd
