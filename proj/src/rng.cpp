#include "zonediag/rng.hpp"

namespace zd {

double pairwise_sum(const std::vector<double>& xs) {
    // recursion-free pairwise reduction
    if (xs.empty()) return 0.0;
    std::vector<double> acc(xs);
    std::size_t n = acc.size();
    while (n > 1) {
        std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i) acc[i] = acc[2 * i] + acc[2 * i + 1];
        if (n % 2) {
            acc[half] = acc[n - 1];
            ++half;
        }
        n = half;
    }
    return acc[0];
}

}  // namespace zd
