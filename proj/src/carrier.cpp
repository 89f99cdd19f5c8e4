#include "zonediag/carrier.hpp"

#include <algorithm>
#include <stdexcept>

namespace zd {

FiniteCarrier::FiniteCarrier(Space sp) : space_(std::move(sp)) {
    if (space_.kind != WorldKind::FinitePoints)
        throw std::invalid_argument("FiniteCarrier needs a finite-points world");
}

std::vector<double> FiniteCarrier::site_field(std::span<const Point> pts) const {
    std::vector<double> f(size(), kInf);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Point& x = space_.world_points[i];
        for (const Point& p : pts) f[i] = std::min(f[i], norm_compare(norm(), x, p));
    }
    return f;
}

std::vector<double> FiniteCarrier::mask_field(const Mask& m) const {
    if (m.size() != size()) throw std::invalid_argument("mask size mismatch");
    std::vector<double> f(size(), kInf);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Point& x = space_.world_points[i];
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[j])
                f[i] = std::min(f[i], norm_compare(norm(), x, space_.world_points[j]));
    }
    return f;
}

GridCarrier::GridCarrier(Space box_space, Grid g)
    : space_(std::move(box_space)), grid_(std::move(g)) {
    if (space_.kind != WorldKind::Box)
        throw std::invalid_argument("GridCarrier needs a box world");
    if (space_.dim() != grid_.dim())
        throw std::invalid_argument("grid/world dimension mismatch");
}

std::vector<double> GridCarrier::site_field(std::span<const Point> pts) const {
    return point_distance_field(grid_, pts, norm());
}

std::vector<double> GridCarrier::mask_field(const Mask& m) const {
    return mask_distance_field(grid_, m, norm());
}

std::shared_ptr<const Carrier> make_carrier(const Space& sp, int grid_n_default) {
    switch (sp.kind) {
        case WorldKind::FinitePoints:
            return std::make_shared<FiniteCarrier>(sp);
        case WorldKind::Box: {
            std::vector<int> n(sp.lo.size(), grid_n_default);
            return std::make_shared<GridCarrier>(sp, Grid(sp.lo, sp.hi, n));
        }
        case WorldKind::GluedSegmentDisk:
            throw unsupported_error("glued space has no carrier; use the analytic checks");
    }
    throw std::invalid_argument("unknown world kind");
}

Mask RegionTuple::covered() const {
    Mask u(carrier->size(), 0);
    for (const Mask& m : comp)
        for (std::size_t i = 0; i < u.size(); ++i) u[i] |= m[i];
    return u;
}

Mask RegionTuple::neutral_mask() const { return mask_complement(covered()); }

bool same_components(const RegionTuple& a, const RegionTuple& b) {
    if (a.comp.size() != b.comp.size()) return false;
    for (std::size_t k = 0; k < a.comp.size(); ++k)
        if (a.comp[k] != b.comp[k]) return false;
    return true;
}

bool componentwise_subset(const RegionTuple& a, const RegionTuple& b) {
    if (a.comp.size() != b.comp.size()) return false;
    for (std::size_t k = 0; k < a.comp.size(); ++k)
        if (!mask_subset(a.comp[k], b.comp[k])) return false;
    return true;
}

std::vector<Mask> rasterize_sites(const Carrier& c, const SiteTuple& sites) {
    std::vector<Mask> out;
    out.reserve(sites.sites.size());
    for (const auto& site : sites.sites) {
        Mask m(c.size(), 0);
        if (const Grid* g = c.grid()) {
            for (const Point& p : site) m[g->nearest_index(p)] = 1;
        } else {
            // finite world: site points are carrier points
            for (const Point& p : site) {
                bool found = false;
                for (std::size_t i = 0; i < c.size(); ++i)
                    if (norm_compare(c.norm(), c.point(i), p) == 0.0) {
                        m[i] = 1;
                        found = true;
                    }
                if (!found)
                    throw std::invalid_argument("site point is not a world point");
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

RegionTuple make_region_tuple(std::shared_ptr<const Carrier> c, SiteTuple sites,
                              std::vector<Mask> comps) {
    sites.validate();
    if (comps.size() != sites.sites.size())
        throw std::invalid_argument("one region per site required");
    for (const Mask& m : comps)
        if (m.size() != c->size())
            throw std::invalid_argument("region mask size mismatch");
    RegionTuple r;
    r.carrier = std::move(c);
    r.sites = std::move(sites);
    r.comp = std::move(comps);
    return r;
}

}  // namespace zd
