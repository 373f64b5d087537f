#include "jcm/numerics.hpp"

#include <cmath>

namespace jcm {

namespace {

double pairwise_sum_impl(const double* data, std::size_t n) {
    if (n <= 16) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += data[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_impl(data, half) + pairwise_sum_impl(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> terms) {
    return pairwise_sum_impl(terms.data(), terms.size());
}

double sinc(double x) {
    const double ax = std::abs(x);
    if (ax > 1e-4) return std::sin(x) / x;
    const double x2 = x * x;
    // 1 - x^2/6 + x^4/120; next term is below double epsilon for |x| <= 1e-4
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
}

double sin_sqrt_over_sqrt(double d, double t) {
    const double root = std::sqrt(d);
    return t * sinc(root * t);
}

}  // namespace jcm
