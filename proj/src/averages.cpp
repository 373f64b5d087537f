#include "jcm/averages.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "jcm/numerics.hpp"
#include "jcm/series.hpp"

namespace jcm {

TimeAverages time_average_closed_resonant(double beta) {
    if (beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    const double v = 0.5 * (1.0 - std::exp(-beta));
    return {0.0, 0.0, v, -v};
}

TimeAverages time_average_closed_general(const ModelParams& p) {
    p.validate();
    if (p.beta == 0.0) return {0.0, 0.0, 0.0, 0.0};

    const double b = p.thermal_exponent();
    const double hdw2 = 0.25 * p.delta_omega() * p.delta_omega();
    const double g2 = p.g * p.g;
    const int n_max = truncation_order(b, p.truncation);

    std::vector<double> t3(n_max), t4(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const double d = hdw2 + g2 * n;
        const double em1 = std::exp(-b * (n - 1));
        const double e0 = std::exp(-b * n);
        t3[n - 1] = (hdw2 * em1 + 0.5 * g2 * n * (em1 - e0)) / d;
        t4[n - 1] = (hdw2 * em1 + 0.5 * g2 * n * (em1 + e0)) / d;
    }
    const double pref = 1.0 - std::exp(-b);
    return {0.0, 0.0, pref * pairwise_sum(t3), pref * pairwise_sum(t4) - 1.0};
}

std::pair<TimeAverages, TimeAverages> time_average_limits(const ModelParams& p) {
    if (p.g == 0.0) throw std::invalid_argument("coupling g must be nonzero");
    const double dw2 = p.delta_omega() * p.delta_omega();
    const double g2 = p.g * p.g;
    const double denom = dw2 + 4.0 * g2;
    TimeAverages high_t{};  // beta -> 0: everything averages to zero
    TimeAverages low_t{0.0, 0.0, (dw2 + 2.0 * g2) / denom, -2.0 * g2 / denom};
    return {high_t, low_t};
}

BlochVector average_bloch(const BlochVector& s0, const TimeAverages& a) {
    return evolve_bloch(s0, {a.avg_l1, a.avg_l2, a.avg_l3, a.avg_l4});
}

BlochVector time_average_numeric(const BlochVector& s0, const ModelParams& p,
                                 double t_max, double step) {
    if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");
    if (!(step > 0.0) || step > t_max)
        throw std::invalid_argument("step must satisfy 0 < step <= t_max");
    if (s0.norm() > 1.0 + 1e-9)
        throw std::invalid_argument("initial Bloch vector must lie in the unit ball");

    const auto n_steps = static_cast<std::ptrdiff_t>(std::llround(t_max / step));
    MapEvaluator ev(p);
    double ax = 0.0, ay = 0.0, az = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : ax, ay, az)
    for (std::ptrdiff_t k = 0; k <= n_steps; ++k) {
        const BlochVector s = evolve_bloch(s0, ev.at(step * k));
        const double w = (k == 0 || k == n_steps) ? 0.5 : 1.0;
        ax += w * s.sx;
        ay += w * s.sy;
        az += w * s.sz;
    }
    const double inv = 1.0 / static_cast<double>(n_steps);
    return {ax * inv, ay * inv, az * inv};
}

}  // namespace jcm
