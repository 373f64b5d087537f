// Small numeric helpers shared by the series evaluators.
#pragma once

#include <span>

namespace jcm {

/// Pairwise (tree) summation. Error grows like O(log n) in ulps instead of
/// O(n) for naive accumulation; the thermal series reach a few thousand terms
/// at high temperature, so this keeps them at full double precision.
double pairwise_sum(std::span<const double> terms);

/// sin(x)/x with the removable singularity handled by a Taylor branch.
double sinc(double x);

/// sin(sqrt(d) * t) / sqrt(d) for d >= 0, equal to t at d = 0.
double sin_sqrt_over_sqrt(double d, double t);

}  // namespace jcm
