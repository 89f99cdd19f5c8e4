#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zonediag/geometry.hpp"

namespace zd {

// Regular grid of pixel centers over a box, up to 3 dimensions.
// Centers sit at lo + index*pitch with pitch = (hi-lo)/(n-1), so the box
// corners are themselves pixel centers.
struct Grid {
    std::vector<double> lo, hi;
    std::vector<int> n;
    std::vector<double> pitch_;

    Grid() = default;
    Grid(std::vector<double> lo_, std::vector<double> hi_, std::vector<int> n_);

    int dim() const { return static_cast<int>(n.size()); }
    std::size_t count() const;
    double pitch(int axis) const { return pitch_[axis]; }
    double max_pitch() const;
    // reported geometric tolerance: max pitch times sqrt(m)
    double diameter_tol() const;

    double coord(int axis, long idx) const {
        return lo[axis] + static_cast<double>(idx) * pitch_[axis];
    }
    Point point(std::size_t flat) const;
    std::array<long, 3> unflatten(std::size_t flat) const;
    std::size_t flatten(std::span<const long> idx) const;
    std::size_t nearest_index(const Point& p) const;  // rounded, clamped
};

using Mask = std::vector<std::uint8_t>;

enum class FieldBackend { Separable, BruteForce };

// Grid-restricted distance field in comparison form (squared for L2): at
// every pixel center x, the min over set pixels y of |x-y| in the norm,
// with +inf on empty masks. The separable backends are exact, not
// approximations; the brute-force backend exists as an independent oracle.
std::vector<double> mask_distance_field(const Grid& g, const Mask& m, Norm norm,
                                        FieldBackend backend = FieldBackend::Separable);

// Comparison-form field of distances to an explicit point set (site points
// need not lie on pixel centers). Empty set -> +inf.
std::vector<double> point_distance_field(const Grid& g, std::span<const Point> pts,
                                         Norm norm);

Mask mask_union(const Mask& a, const Mask& b);
Mask mask_intersection(const Mask& a, const Mask& b);
Mask mask_difference(const Mask& a, const Mask& b);
Mask mask_complement(const Mask& a);
std::size_t mask_count(const Mask& a);
bool mask_subset(const Mask& a, const Mask& b);

// set pixels with a face neighbor outside the mask or outside the grid
std::size_t surface_pixel_count(const Grid& g, const Mask& m);

struct Rgb {
    std::uint8_t r, g, b;
};
std::vector<Rgb> default_palette();

// Binary PPM (P6). Pixels in no mask are black; otherwise the color of the
// lowest-index containing mask. Rows run from high y to low y so images are
// oriented like plots. 2-D grids only.
void write_ppm(const std::string& path, const Grid& g,
               const std::vector<Mask>& masks, const std::vector<Rgb>& palette,
               const std::string& comment = {});

// count pixels that belong to no mask (the black pixels of write_ppm)
std::size_t uncovered_count(const std::vector<Mask>& masks, std::size_t total);

// Mask dump: one header line "mask <m> <n0> ... <nm-1>" then one '0'/'1'
// byte per pixel in flat order (axis 0 fastest).
void write_mask(const std::string& path, const Grid& g, const Mask& m);
Mask read_mask(const std::string& path, std::vector<int>* shape = nullptr);

}  // namespace zd
