#include "zonediag/space.hpp"

#include <algorithm>
#include <cmath>

namespace zd {

std::string to_string(Norm n) {
    switch (n) {
        case Norm::L1: return "l1";
        case Norm::L2: return "l2";
        case Norm::Linf: return "linf";
    }
    return "?";
}

Space Space::box(std::vector<double> lo, std::vector<double> hi, Norm n) {
    Space s;
    s.kind = WorldKind::Box;
    s.norm = n;
    s.lo = std::move(lo);
    s.hi = std::move(hi);
    if (s.lo.empty() || s.lo.size() != s.hi.size())
        throw std::invalid_argument("box: lo/hi dimension mismatch");
    for (std::size_t i = 0; i < s.lo.size(); ++i)
        if (!(s.lo[i] < s.hi[i]))
            throw std::invalid_argument("box: lo must be strictly below hi");
    return s;
}

Space Space::finite_points(std::vector<Point> pts, Norm n) {
    Space s;
    s.kind = WorldKind::FinitePoints;
    s.norm = n;
    s.world_points = std::move(pts);
    if (s.world_points.empty())
        throw std::invalid_argument("finite_points: empty world");
    const std::size_t m = s.world_points.front().size();
    for (const Point& p : s.world_points)
        if (p.size() != m)
            throw std::invalid_argument("finite_points: mixed dimensions");
    return s;
}

Space Space::glued_segment_disk() {
    Space s;
    s.kind = WorldKind::GluedSegmentDisk;
    s.norm = Norm::L2;
    return s;
}

int Space::dim() const {
    switch (kind) {
        case WorldKind::Box: return static_cast<int>(lo.size());
        case WorldKind::FinitePoints:
            return static_cast<int>(world_points.front().size());
        case WorldKind::GluedSegmentDisk: return 2;
    }
    return 0;
}

bool Space::contains(const Point& p, double tol) const {
    if (static_cast<int>(p.size()) != dim()) return false;
    switch (kind) {
        case WorldKind::Box:
            for (std::size_t i = 0; i < lo.size(); ++i)
                if (p[i] < lo[i] - tol || p[i] > hi[i] + tol) return false;
            return true;
        case WorldKind::FinitePoints:
            for (const Point& w : world_points)
                if (norm_distance(norm, w, p) <= tol) return true;
            return false;
        case WorldKind::GluedSegmentDisk:
            return glued::on_segment(p, tol) || glued::in_disk(p, tol);
    }
    return false;
}

std::string Space::describe() const {
    switch (kind) {
        case WorldKind::Box: {
            std::string s = "box[";
            for (std::size_t i = 0; i < lo.size(); ++i) {
                if (i) s += ", ";
                s += std::to_string(lo[i]) + ".." + std::to_string(hi[i]);
            }
            return s + "] " + to_string(norm);
        }
        case WorldKind::FinitePoints:
            return "finite world of " + std::to_string(world_points.size()) +
                   " points, " + to_string(norm);
        case WorldKind::GluedSegmentDisk:
            return "glued segment-disk";
    }
    return "?";
}

namespace glued {

bool on_segment(const Point& p, double tol) {
    return std::abs(p[0] - kSegmentX) <= tol && p[1] >= kSegmentYLo - tol &&
           p[1] <= kSegmentYHi + tol;
}

bool in_disk(const Point& p, double tol) {
    return euclidean(p, kDiskCenter) <= kDiskRadius + tol;
}

double dist_to_segment_piece(const Point& p, double ylo, double yhi) {
    if (on_segment(p)) {
        if (p[1] < ylo) return ylo - p[1];
        if (p[1] > yhi) return p[1] - yhi;
        return 0.0;
    }
    // via the junction: nearest segment-piece point to the junction is ylo
    return euclidean(p, kJunction) + (ylo - kSegmentYLo);
}

double dist_to_disk(const Point& p) {
    if (in_disk(p)) return 0.0;
    if (on_segment(p)) return euclidean(p, kJunction);  // junction is in the disk
    const double r = euclidean(p, kDiskCenter);
    return std::max(0.0, r - kDiskRadius);
}

static double metric(const Point& x, const Point& y) {
    const bool xs = on_segment(x), ys = on_segment(y);
    const bool xd = in_disk(x), yd = in_disk(y);
    if ((xs && ys) || (xd && yd)) return euclidean(x, y);
    return euclidean(x, kJunction) + euclidean(y, kJunction);
}

}  // namespace glued

static void require_in_world(const Space& s, const Point& p, const char* who) {
    if (!s.contains(p))
        throw std::domain_error(std::string(who) + ": point outside world (" +
                                s.describe() + ")");
}

double distance(const Space& s, const Point& x, const Point& y) {
    require_in_world(s, x, "distance");
    require_in_world(s, y, "distance");
    if (s.kind == WorldKind::GluedSegmentDisk) return glued::metric(x, y);
    return norm_distance(s.norm, x, y);
}

Point point_along(const Space& s, const Point& x, const Point& y, double t) {
    if (!s.geodesic())
        throw unsupported_error("point_along: space is not geodesic");
    require_in_world(s, x, "point_along");
    require_in_world(s, y, "point_along");
    const double d = distance(s, x, y);
    if (t < -kGeomTol || t > d + kGeomTol)
        throw std::domain_error("point_along: t outside [0, d(x,y)]");
    t = std::clamp(t, 0.0, d);
    if (d == 0.0) return x;

    if (s.kind == WorldKind::Box) {
        // straight segments are metric segments in any norm
        const double u = t / d;
        Point g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            g[i] = x[i] + u * (y[i] - x[i]);
        return g;
    }

    // glued space
    const bool xs = glued::on_segment(x), ys = glued::on_segment(y);
    const bool same = (xs && ys) || (glued::in_disk(x) && glued::in_disk(y));
    if (same) {
        const double u = t / d;
        return Point{x[0] + u * (y[0] - x[0]), x[1] + u * (y[1] - x[1])};
    }
    const double d1 = euclidean(x, glued::kJunction);
    if (t <= d1) {
        if (d1 == 0.0) return x;
        const double u = t / d1;
        return Point{x[0] + u * (glued::kJunction[0] - x[0]),
                     x[1] + u * (glued::kJunction[1] - x[1])};
    }
    const double d2 = euclidean(glued::kJunction, y);
    const double u = (t - d1) / d2;
    return Point{glued::kJunction[0] + u * (y[0] - glued::kJunction[0]),
                 glued::kJunction[1] + u * (y[1] - glued::kJunction[1])};
}

double set_distance(const Space& s, std::span<const Point> a,
                    std::span<const Point> b) {
    if (a.empty() || b.empty()) return kInf;
    double best = kInf;
    for (const Point& x : a)
        for (const Point& y : b) best = std::min(best, distance(s, x, y));
    return best;
}

}  // namespace zd
