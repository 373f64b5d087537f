#include "jcm/series.hpp"

#include <cmath>
#include <stdexcept>

#include "jcm/numerics.hpp"

namespace jcm {

namespace {

void require_time(double t) {
    if (t < 0.0) throw std::invalid_argument("time must be >= 0");
}

}  // namespace

ResonantEvaluator::ResonantEvaluator(double beta, TruncationPolicy policy) : beta_(beta) {
    if (beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    order_ = truncation_order(beta, policy);
    pref_ = 1.0 - std::exp(-beta);

    const int n_max = order_;
    sqrt_n_.resize(n_max + 2);
    for (int n = 0; n <= n_max + 1; ++n) sqrt_n_[n] = std::sqrt(static_cast<double>(n));
    w1_.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) w1_[n] = std::exp(-beta * n);

    // Coefficients of the shared cos(2 sqrt(m) t) series, written without
    // sinh/cosh prefactors so that no intermediate overflows at large beta:
    //   L3: sinh(beta) e^{-m beta}          = (e^{-(m-1)b} - e^{-(m+1)b}) / 2
    //   L4: (e^b-1)^2/(2e^b) e^{-m beta}    = (e^{-(m-1)b} - 2e^{-m b} + e^{-(m+1)b}) / 2
    c3_.resize(n_max);
    c4_.resize(n_max);
    for (int m = 1; m <= n_max; ++m) {
        const double em1 = std::exp(-beta * (m - 1));
        const double e0 = std::exp(-beta * m);
        const double ep1 = std::exp(-beta * (m + 1));
        c3_[m - 1] = 0.5 * (em1 - ep1);
        c4_[m - 1] = 0.5 * (em1 - 2.0 * e0 + ep1);
    }
}

EvolutionMatrix ResonantEvaluator::at(double t) const {
    require_time(t);
    const int n_max = order_;

    // cos(sqrt(n) t) once per n; cos(2 sqrt(m) t) = 2 cos^2(sqrt(m) t) - 1.
    std::vector<double> cosr(n_max + 2);
    for (int n = 0; n <= n_max + 1; ++n) cosr[n] = std::cos(sqrt_n_[n] * t);

    std::vector<double> terms(n_max + 1);
    for (int n = 0; n <= n_max; ++n) terms[n] = cosr[n + 1] * cosr[n] * w1_[n];
    const double l1 = pref_ * pairwise_sum(terms);

    std::vector<double> t3(n_max), t4(n_max);
    for (int m = 1; m <= n_max; ++m) {
        const double cos2 = 2.0 * cosr[m] * cosr[m] - 1.0;
        t3[m - 1] = c3_[m - 1] * cos2;
        t4[m - 1] = c4_[m - 1] * cos2;
    }
    const double l3 = 0.5 * pref_ + pairwise_sum(t3);
    const double l4 = -0.5 * pref_ + pairwise_sum(t4);
    return {l1, 0.0, l3, l4};
}

GeneralEvaluator::GeneralEvaluator(const ModelParams& p) {
    p.validate();
    half_dw_ = 0.5 * p.delta_omega();
    g2_ = p.g * p.g;
    const double b = p.thermal_exponent();
    order_ = truncation_order(b, p.truncation);
    pref_ = 1.0 - std::exp(-b);

    const int n_max = order_;
    w_.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) w_[n] = std::exp(-b * n);
    dt_.resize(n_max + 2);
    sq_dt_.resize(n_max + 2);
    for (int n = 0; n <= n_max + 1; ++n) {
        dt_[n] = half_dw_ * half_dw_ + g2_ * n;
        sq_dt_[n] = std::sqrt(dt_[n]);
    }
}

EvolutionMatrix GeneralEvaluator::at(double t) const {
    require_time(t);
    const int n_max = order_;

    std::vector<double> cosr(n_max + 2), snc(n_max + 2);
    for (int n = 0; n <= n_max + 1; ++n) {
        cosr[n] = std::cos(sq_dt_[n] * t);
        // sin(sqrt(D) t)/sqrt(D); finite limit t at the n = 0, resonant corner
        snc[n] = sin_sqrt_over_sqrt(dt_[n], t);
    }

    std::vector<double> re(n_max + 1), im(n_max + 1), a00(n_max + 1), a11(n_max);
    for (int n = 0; n <= n_max; ++n) {
        // [cos - (i/2) dw snc]_{n+1} * [cos - (i/2) dw snc]_n
        re[n] = (cosr[n + 1] * cosr[n] - half_dw_ * half_dw_ * snc[n + 1] * snc[n]) * w_[n];
        im[n] = -half_dw_ * (cosr[n + 1] * snc[n] + snc[n + 1] * cosr[n]) * w_[n];
        a00[n] = (half_dw_ * half_dw_ + g2_ * (n + 1) * cosr[n + 1] * cosr[n + 1]) / dt_[n + 1] * w_[n];
        if (n >= 1) {
            const double s2 = 1.0 - cosr[n] * cosr[n];
            a11[n - 1] = g2_ * n * s2 / dt_[n] * w_[n];
        }
    }
    const double l1 = pref_ * pairwise_sum(re);
    const double l2 = pref_ * pairwise_sum(im);
    const double a0000 = pref_ * pairwise_sum(a00);
    const double a1100 = pref_ * pairwise_sum(a11);
    return {l1, l2, a0000 - a1100, a0000 + a1100 - 1.0};
}

MapEvaluator::MapEvaluator(const ModelParams& p) {
    p.validate();
    if (p.delta_omega() == 0.0) {
        g_abs_ = std::abs(p.g);
        resonant_ = std::make_unique<ResonantEvaluator>(p.thermal_exponent(), p.truncation);
    } else {
        general_ = std::make_unique<GeneralEvaluator>(p);
    }
}

EvolutionMatrix MapEvaluator::at(double t) const {
    if (resonant_) return resonant_->at(g_abs_ * t);
    return general_->at(t);
}

int MapEvaluator::order() const {
    return resonant_ ? resonant_->order() : general_->order();
}

EvolutionMatrix evolution_matrix_resonant(double t, double beta, TruncationPolicy policy) {
    return ResonantEvaluator(beta, policy).at(t);
}

EvolutionMatrix evolution_matrix_general(double t, const ModelParams& p) {
    return GeneralEvaluator(p).at(t);
}

EvolutionMatrix evolution_matrix(double t, const ModelParams& p) {
    return MapEvaluator(p).at(t);
}

Trajectory trajectory(const BlochVector& s0, std::span<const double> t_grid,
                      const ModelParams& p) {
    if (t_grid.empty()) throw std::invalid_argument("time grid must be nonempty");
    if (t_grid.front() < 0.0) throw std::invalid_argument("times must be >= 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("time grid must be strictly increasing");
    if (s0.norm() > 1.0 + 1e-9)
        throw std::invalid_argument("initial Bloch vector must lie in the unit ball");

    MapEvaluator ev(p);
    Trajectory traj;
    traj.times.assign(t_grid.begin(), t_grid.end());
    traj.points.resize(t_grid.size());
    const auto count = static_cast<std::ptrdiff_t>(t_grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        traj.points[i] = evolve_bloch(s0, ev.at(traj.times[i]));
    return traj;
}

}  // namespace jcm
