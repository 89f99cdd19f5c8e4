#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zonediag/geometry.hpp"

namespace zd {

struct unsupported_error : std::logic_error {
    using std::logic_error::logic_error;
};

enum class WorldKind { Box, FinitePoints, GluedSegmentDisk };

// A world with a metric. Three kinds:
//   Box              -- axis-aligned box in R^m under an lp norm (geodesic)
//   FinitePoints     -- finite point set under an ambient lp norm
//   GluedSegmentDisk -- the segment {0}x[-2,3] glued at (0,-2) to the unit
//                       disk centered at (0,-3); intrinsic metric (geodesic)
struct Space {
    WorldKind kind = WorldKind::Box;
    Norm norm = Norm::L2;
    std::vector<double> lo, hi;        // Box
    std::vector<Point> world_points;   // FinitePoints

    static Space box(std::vector<double> lo, std::vector<double> hi,
                     Norm n = Norm::L2);
    static Space finite_points(std::vector<Point> pts, Norm n = Norm::L2);
    static Space glued_segment_disk();

    int dim() const;
    bool geodesic() const { return kind != WorldKind::FinitePoints; }
    bool contains(const Point& p, double tol = kGeomTol) const;
    std::string describe() const;
};

// Metric distance between world points. Throws std::domain_error if either
// point lies outside the world.
double distance(const Space& s, const Point& x, const Point& y);

// Point at arc length t along a metric segment from x to y, satisfying
// d(x,g(t)) = t and d(g(t),y) = d(x,y) - t. Requires a geodesic space.
Point point_along(const Space& s, const Point& x, const Point& y, double t);

// inf over pairs; +inf when either set is empty.
double set_distance(const Space& s, std::span<const Point> a,
                    std::span<const Point> b);

// --- glued segment-disk internals (exposed for the analytic checks) ---

namespace glued {

inline constexpr double kSegmentX = 0.0;
inline constexpr double kSegmentYLo = -2.0;   // junction end (closed here)
inline constexpr double kSegmentYHi = 3.0;
inline const Point kDiskCenter = {0.0, -3.0};
inline constexpr double kDiskRadius = 1.0;
inline const Point kJunction = {0.0, -2.0};

bool on_segment(const Point& p, double tol = kGeomTol);
bool in_disk(const Point& p, double tol = kGeomTol);

// Distance from a world point to the sub-segment {0} x [ylo,yhi].
double dist_to_segment_piece(const Point& p, double ylo, double yhi);
// Distance from a world point to the whole disk component.
double dist_to_disk(const Point& p);

}  // namespace glued

}  // namespace zd
