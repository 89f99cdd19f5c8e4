#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace zd {

// Seeded random stream with fixed-width draws, so a given seed produces the
// same sequence on every platform and standard-library implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        // 53 random bits -> [0,1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::uint64_t bits() { return eng_(); }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = 0.0;
        do {
            u = uniform01();
        } while (u <= 0.0);
        const double v = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 2.0 * std::numbers::pi * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Uniform direction on the unit sphere of R^m, by normalizing normals.
    std::vector<double> unit_vector(int m) {
        std::vector<double> v(m);
        double s = 0.0;
        do {
            s = 0.0;
            for (int i = 0; i < m; ++i) {
                v[i] = normal();
                s += v[i] * v[i];
            }
        } while (s == 0.0);
        const double inv = 1.0 / std::sqrt(s);
        for (double& x : v) x *= inv;
        return v;
    }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Deterministic pairwise sum: independent of accumulation chunking and more
// accurate than a running sum on long streams.
double pairwise_sum(const std::vector<double>& xs);

}  // namespace zd
