#pragma once

#include <memory>
#include <span>
#include <vector>

#include "zonediag/raster.hpp"
#include "zonediag/sites.hpp"
#include "zonediag/space.hpp"

namespace zd {

// A carrier is the evaluation domain for region tuples: either the points of
// a finite world or the pixel centers of a grid over a box world. Regions
// are subsets of the carrier, stored as masks. Distance fields are returned
// in comparison form (squared for L2) so dominance predicates can compare
// without taking roots.
class Carrier {
  public:
    virtual ~Carrier() = default;

    virtual const Space& space() const = 0;
    virtual std::size_t size() const = 0;
    virtual Point point(std::size_t i) const = 0;
    // geometric tolerance of the representation, in metric form
    virtual double slack() const = 0;
    virtual std::vector<double> site_field(std::span<const Point> pts) const = 0;
    virtual std::vector<double> mask_field(const Mask& m) const = 0;
    virtual const Grid* grid() const { return nullptr; }

    Norm norm() const { return space().norm; }
    double to_compare(double metric_value) const {
        return metric_to_compare(norm(), metric_value);
    }
    double to_metric(double compare_value) const {
        return compare_to_metric(norm(), compare_value);
    }
};

// The points of a FinitePoints world; all distances by brute force, exact.
class FiniteCarrier final : public Carrier {
  public:
    explicit FiniteCarrier(Space sp);

    const Space& space() const override { return space_; }
    std::size_t size() const override { return space_.world_points.size(); }
    Point point(std::size_t i) const override { return space_.world_points[i]; }
    double slack() const override { return 0.0; }
    std::vector<double> site_field(std::span<const Point> pts) const override;
    std::vector<double> mask_field(const Mask& m) const override;

  private:
    Space space_;
};

// Pixel centers of a grid over a box world; mask fields via the exact
// separable transforms.
class GridCarrier final : public Carrier {
  public:
    GridCarrier(Space box_space, Grid g);

    const Space& space() const override { return space_; }
    std::size_t size() const override { return grid_.count(); }
    Point point(std::size_t i) const override { return grid_.point(i); }
    double slack() const override { return grid_.diameter_tol(); }
    std::vector<double> site_field(std::span<const Point> pts) const override;
    std::vector<double> mask_field(const Mask& m) const override;
    const Grid* grid() const override { return &grid_; }

  private:
    Space space_;
    Grid grid_;
};

std::shared_ptr<const Carrier> make_carrier(const Space& sp, int grid_n_default);

// An indexed tuple of regions over a carrier, one component per site;
// components are expected to contain their sites.
struct RegionTuple {
    std::shared_ptr<const Carrier> carrier;
    SiteTuple sites;
    std::vector<Mask> comp;

    int count() const { return static_cast<int>(comp.size()); }
    Mask covered() const;       // union of components
    Mask neutral_mask() const;  // complement of the union
};

bool same_components(const RegionTuple& a, const RegionTuple& b);
bool componentwise_subset(const RegionTuple& a, const RegionTuple& b);

// The site points as carrier subsets (nearest carrier point per site point).
std::vector<Mask> rasterize_sites(const Carrier& c, const SiteTuple& sites);

RegionTuple make_region_tuple(std::shared_ptr<const Carrier> c, SiteTuple sites,
                              std::vector<Mask> comps);

}  // namespace zd
