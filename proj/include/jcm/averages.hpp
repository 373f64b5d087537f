// Long-time averages of the Bloch vector: exact closed forms on resonance,
// truncated series off resonance, asymptotic limits, and a trapezoidal
// finite-horizon estimator used for cross-validation.
#pragma once

#include <utility>

#include "jcm/model.hpp"

namespace jcm {

/// Time-averaged map coefficients. The transverse averages vanish for every
/// temperature and detuning, so closed-form results always carry
/// avg_l1 = avg_l2 = 0.
struct TimeAverages {
    double avg_l1 = 0.0;
    double avg_l2 = 0.0;
    double avg_l3 = 0.0;
    double avg_l4 = 0.0;
};

/// Resonant closed forms: <L3> = (1 - e^{-beta})/2 and <L4> = -<L3>.
TimeAverages time_average_closed_resonant(double beta);

/// Detuned closed forms, summed to the params' truncation order:
///   <L3> = (1-e^{-b}) sum_{n>=1} [ (dw/2)^2 e^{-(n-1)b}
///                                 + (g^2 n / 2)(e^{-(n-1)b} - e^{-n b}) ] / Dtilde(n)
///   <L4> = same with (+) between the exponentials, minus 1
/// with b = beta omega. beta = 0 returns exact zeros (the infinite-
/// temperature limit) rather than evaluating the ill-conditioned series.
TimeAverages time_average_closed_general(const ModelParams& p);

/// (beta -> 0, beta -> infinity) limits. The first is the zero map; the
/// second has
///   <L3> -> (dw^2 + 2 g^2) / (dw^2 + 4 g^2),
///   <L4> -> -2 g^2 / (dw^2 + 4 g^2).
std::pair<TimeAverages, TimeAverages> time_average_limits(const ModelParams& p);

/// <S> = diag(<L1>, <L1>, <L3>) S(0) + (0, 0, <L4>), with the transverse
/// rotation included for completeness.
BlochVector average_bloch(const BlochVector& s0, const TimeAverages& avgs);

/// Trapezoid-rule average of the trajectory over [0, t_max] on a uniform
/// grid. Deviation from the closed forms decays like O(1/t_max).
/// Requires t_max > 0 and 0 < step <= t_max; t_max is rounded to a whole
/// number of steps.
BlochVector time_average_numeric(const BlochVector& s0, const ModelParams& p,
                                 double t_max, double step);

}  // namespace jcm
