#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zonediag/rng.hpp"
#include "zonediag/zone.hpp"

namespace zd {

// Length of the dominance segment from p in Euclidean direction theta: the
// largest t <= t_max with p + t*theta inside the box and the step distance
// not exceeding the distance to A. The feasible set is an interval because
// the gap grows monotonically along the ray; solved by bisection to 1e-10.
double ray_dominance_extent(const Space& box, const Point& p, const Point& theta,
                            std::span<const Point> a, double t_max);

// Reach samples of a star-shaped region around a center, over directions
// drawn uniformly on the unit sphere.
struct RadialProfile {
    int m = 0;
    Point center;
    std::vector<double> reach;
    double clip = kInf;
};

RadialProfile sample_dominance_profile(const Space& box, const Point& p,
                                       std::span<const Point> a, long n_dirs,
                                       double t_max, Rng& rng);

struct VolumeEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long samples = 0;
};

// surface(S^{m-1}) * mean(reach^m) / m, with a Monte Carlo standard error.
VolumeEstimate radial_volume(const RadialProfile& profile);

double sphere_surface_area(int m);

// c = 1 + min(r/(32 rho), omega/rho)
inline double growth_factor(double r, double rho, double omega) {
    return 1.0 + std::min(r / (32.0 * rho), omega / rho);
}

// ---- raster concentration pipeline ----------------------------------------

struct RegionConcentration {
    int k = 0;                 // 1-based component index
    double volume = 0.0;
    double boundary_margin = 0.0;  // d(R_k, world boundary)
    bool interior = false;         // margin >= omega
    double rho_measured = kInf;    // max over pixels of d(x, rival sites)
    bool ball_condition_ok = false;
    double shell_thickness = 0.0;  // min(r_k/32, omega)
    double shell_volume = 0.0;     // neutral pixels within the shell
    double required = 0.0;         // (c^m - 1) * volume
    double slack = 0.0;
    bool pass = false;
};

struct ConcentrationReport {
    int m = 0;
    double omega = 0.0, rho = 0.0;
    double r_min = 0.0;
    double growth = 1.0;  // c = 1 + min(r/(32 rho), omega/rho)
    bool converged = false;
    bool double_zone_fixed = false;  // even limit is a fixed point of Dom^2
    bool zone_fixed = false;         // and of Dom itself
    std::vector<double> radii;
    std::vector<RegionConcentration> regions;
    bool interior_exists = false;
    double vol_interior = 0.0;  // union of interior regions
    double vol_neutral = 0.0;
    double ratio = 0.0;       // interior / (interior + neutral)
    double ratio_bound = 0.0; // c^-m
    double ratio_slack = 0.0;
    bool ratio_pass = false;
    bool shells_pass = false;
    std::string note;
};

ConcentrationReport concentration_report(const SiteTuple& sites, const Grid& g,
                                         double omega, double rho, int max_iter);

// analytic decay of the concentration bound for m = m_from .. m_to
std::vector<std::pair<int, double>> decay_table(double growth, int m_from = 2,
                                                int m_to = 6);

// ---- density sufficient condition ------------------------------------------

// Checks the two-part density condition: some point sits at least (8/3)*omega
// from the world boundary, and every sample point has a site within
// (2/3)*omega. When both hold, a site near that point must own a cell with
// boundary margin at least omega; the margin is verified on the grid.
struct DensityReport {
    double omega = 0.0;
    Point deep_point;
    double deep_margin = 0.0;
    bool margin_ok = false;
    double max_site_gap = 0.0;
    bool covering_ok = false;
    int interior_site = -1;  // 1-based
    double cell_margin = 0.0;
    bool cell_margin_ok = false;
    bool pass = false;
};

DensityReport density_check(const SiteTuple& sites, const Grid& g, double omega);

}  // namespace zd
