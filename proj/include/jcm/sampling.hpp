// Sz sampling on a uniform time grid, histogram construction, arcsine and
// normal density fits, and the variance-vs-temperature power-law fit.
#pragma once

#include <cstdint>
#include <span>

#include "jcm/model.hpp"

namespace jcm {

/// Deterministic samples values[n] = Sz(n * delta_t), n = 0..n_samples.
/// delta_t is in the natural time units of the generating params; beta is
/// copied from them.
struct SampleSeries {
    double delta_t = 0.0;
    double beta = 0.0;
    std::vector<double> values;
};

SampleSeries sample_series(const ModelParams& p, const BlochVector& s0,
                           double delta_t, int n_samples);

/// Uniform bins of width class_interval covering [min, max] of the sample
/// values. Bins are half-open [left, left + dy) with the last bin closed;
/// counts always sum to the number of samples.
struct Histogram {
    std::vector<double> bin_left_edges;
    std::vector<std::int64_t> counts;
    double class_interval = 0.0;

    double center(std::size_t i) const { return bin_left_edges[i] + 0.5 * class_interval; }
    std::int64_t total() const;
};

Histogram build_histogram(const SampleSeries& s, double class_interval);

/// Occupation density of a full-swing sinusoid on [-1, 0]:
/// 1 / sqrt(1 - (2y+1)^2). Defined on the open interval; throws at and
/// beyond the singular endpoints.
double arcsine_density(double y);

/// Normalized Gaussian pdf.
double normal_density(double y, double mu, double sigma2);

/// Population-convention moments (1/(N+1) normalization). Skewness is
/// reported alongside as a shape diagnostic; it is 0 for a degenerate
/// (zero-variance) series.
struct MomentStats {
    double mu = 0.0;
    double sigma2 = 0.0;
    double skewness = 0.0;
};

MomentStats sample_moments(const SampleSeries& s);

struct AmplitudeFit {
    double amplitude = 0.0;
    double rms_residual = 0.0;
};

/// Least-squares scale of a model curve against counts:
/// a = sum(model * count) / sum(model^2).
AmplitudeFit amplitude_least_squares(std::span<const double> model,
                                     std::span<const double> counts);

/// Amplitude of a / sqrt(1 - (2y+1)^2) against bin counts at bin centers.
/// The histogram support must lie within [-1, 0] and at least 3 interior
/// bins are required. The singular endpoint bins hold the density's mass
/// spikes; including them (the default) reproduces the count-level
/// amplitude of the underlying signal, while excluding them fits the bulk
/// density, which comes out lower by design.
AmplitudeFit fit_arcsine_amplitude(const Histogram& h, bool include_singular_bins = true);

/// Amplitude of the unit-peak Gaussian kernel a * exp(-(y-mu)^2/(2 sigma2))
/// against bin counts; mu and sigma2 are taken from the sample moments, not
/// fitted. The fitted a approximates (N+1) dy / (sqrt(2 pi) sigma).
struct NormalFit {
    double amplitude = 0.0;
    double mu = 0.0;
    double sigma2 = 0.0;
    double rms_residual = 0.0;
};

NormalFit fit_normal(const Histogram& h, const MomentStats& m);

/// One moments record per beta, all sampled with identical delta_t and
/// sample count from the initial state S(0) = 0.
struct VarianceScanPoint {
    double beta = 0.0;
    MomentStats stats;
};

std::vector<VarianceScanPoint> variance_scan(std::span<const double> betas,
                                             const ModelParams& p_template,
                                             double delta_t, int n_samples);

/// sigma2(beta) = c1 beta^c2 by linear least squares in log-log space over
/// scan points with beta inside [fit_min, fit_max].
struct PowerLawFit {
    double c1 = 0.0;
    double c2 = 0.0;
    double rms_log_residual = 0.0;
    double fit_min = 0.0;
    double fit_max = 0.0;
};

PowerLawFit power_law_fit(std::span<const VarianceScanPoint> scan,
                          double fit_min, double fit_max);

}  // namespace jcm
