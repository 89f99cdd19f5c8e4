#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace zd {

using Point = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Absolute tolerance for geometric identities on desk-scale coordinates.
inline constexpr double kGeomTol = 1e-9;

enum class Norm { L1, L2, Linf };

std::string to_string(Norm n);

// Distance fields and dominance predicates compare L2 distances in squared
// form; these helpers convert between the comparison form and the metric.
inline double compare_to_metric(Norm n, double v) {
    return n == Norm::L2 ? std::sqrt(v) : v;
}
inline double metric_to_compare(Norm n, double v) {
    return n == Norm::L2 ? v * v : v;
}

// Comparison-form distance, accumulated in fixed axis order so that every
// backend computing the same source/query pair produces identical bits.
inline double norm_compare(Norm n, std::span<const double> a,
                           std::span<const double> b) {
    double acc = 0.0;
    switch (n) {
        case Norm::L1:
            for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
            return acc;
        case Norm::L2:
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double d = a[i] - b[i];
                acc += d * d;
            }
            return acc;
        case Norm::Linf:
            for (std::size_t i = 0; i < a.size(); ++i)
                acc = std::max(acc, std::abs(a[i] - b[i]));
            return acc;
    }
    return acc;
}

inline double norm_distance(Norm n, std::span<const double> a,
                            std::span<const double> b) {
    return compare_to_metric(n, norm_compare(n, a, b));
}

inline double euclidean(std::span<const double> a, std::span<const double> b) {
    return norm_distance(Norm::L2, a, b);
}

}  // namespace zd
