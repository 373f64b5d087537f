#include "jcm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jcm/numerics.hpp"
#include "jcm/series.hpp"

namespace jcm {

SampleSeries sample_series(const ModelParams& p, const BlochVector& s0,
                           double delta_t, int n_samples) {
    if (!(delta_t > 0.0)) throw std::invalid_argument("delta_t must be > 0");
    if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
    if (s0.norm() > 1.0 + 1e-9)
        throw std::invalid_argument("initial Bloch vector must lie in the unit ball");

    MapEvaluator ev(p);
    SampleSeries s;
    s.delta_t = delta_t;
    s.beta = p.beta;
    s.values.resize(static_cast<std::size_t>(n_samples) + 1);
    const auto count = static_cast<std::ptrdiff_t>(s.values.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t n = 0; n < count; ++n)
        s.values[n] = evolve_bloch(s0, ev.at(delta_t * n)).sz;
    return s;
}

std::int64_t Histogram::total() const {
    std::int64_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

Histogram build_histogram(const SampleSeries& s, double class_interval) {
    if (!(class_interval > 0.0)) throw std::invalid_argument("class interval must be > 0");
    if (s.values.empty()) throw std::invalid_argument("sample series is empty");

    const auto [lo_it, hi_it] = std::minmax_element(s.values.begin(), s.values.end());
    const double lo = *lo_it, hi = *hi_it;
    const double dy = class_interval;
    const std::size_t n_bins =
        (hi == lo) ? 1 : static_cast<std::size_t>(std::ceil((hi - lo) / dy));

    Histogram h;
    h.class_interval = dy;
    h.bin_left_edges.resize(n_bins);
    for (std::size_t i = 0; i < n_bins; ++i) h.bin_left_edges[i] = lo + dy * i;
    h.counts.assign(n_bins, 0);
    for (double v : s.values) {
        auto idx = static_cast<std::size_t>((v - lo) / dy);
        if (idx >= n_bins) idx = n_bins - 1;  // closes the last bin
        ++h.counts[idx];
    }
    return h;
}

double arcsine_density(double y) {
    if (!(y > -1.0 && y < 0.0))
        throw std::domain_error("arcsine density defined on the open interval (-1, 0)");
    const double x = 2.0 * y + 1.0;
    return 1.0 / std::sqrt(1.0 - x * x);
}

double normal_density(double y, double mu, double sigma2) {
    if (!(sigma2 > 0.0)) throw std::domain_error("normal density requires sigma2 > 0");
    const double d = y - mu;
    return std::exp(-d * d / (2.0 * sigma2)) / std::sqrt(2.0 * std::numbers::pi * sigma2);
}

MomentStats sample_moments(const SampleSeries& s) {
    if (s.values.empty()) throw std::invalid_argument("sample series is empty");
    const std::size_t n = s.values.size();
    const double mu = pairwise_sum(s.values) / static_cast<double>(n);

    std::vector<double> d2(n), d3(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = s.values[i] - mu;
        d2[i] = d * d;
        d3[i] = d * d * d;
    }
    const double sigma2 = pairwise_sum(d2) / static_cast<double>(n);
    const double m3 = pairwise_sum(d3) / static_cast<double>(n);
    const double skew = sigma2 > 0.0 ? m3 / std::pow(sigma2, 1.5) : 0.0;
    return {mu, sigma2, skew};
}

AmplitudeFit amplitude_least_squares(std::span<const double> model,
                                     std::span<const double> counts) {
    if (model.size() != counts.size() || model.empty())
        throw std::invalid_argument("model/count arrays must be nonempty and equal length");
    double mc = 0.0, mm = 0.0;
    for (std::size_t i = 0; i < model.size(); ++i) {
        mc += model[i] * counts[i];
        mm += model[i] * model[i];
    }
    if (mm == 0.0) throw std::domain_error("degenerate model: all values zero");
    const double a = mc / mm;
    double r2 = 0.0;
    for (std::size_t i = 0; i < model.size(); ++i) {
        const double r = counts[i] - a * model[i];
        r2 += r * r;
    }
    return {a, std::sqrt(r2 / static_cast<double>(model.size()))};
}

namespace {

void require_support_in_unit_interval(const Histogram& h) {
    // The last bin may tile past 0 by up to one class interval even when
    // every sample is <= 0, so the bins' left edges are what gets checked.
    const double lo = h.bin_left_edges.front();
    if (lo < -1.0 - 1e-9 || h.bin_left_edges.back() > 1e-9)
        throw std::domain_error("histogram support must lie within [-1, 0]");
}

}  // namespace

AmplitudeFit fit_arcsine_amplitude(const Histogram& h, bool include_singular_bins) {
    require_support_in_unit_interval(h);
    const std::size_t n_bins = h.counts.size();
    if (n_bins < 5) throw std::domain_error("need at least 3 interior bins for the arcsine fit");

    std::vector<double> model, counts;
    for (std::size_t i = 0; i < n_bins; ++i) {
        if (!include_singular_bins && (i == 0 || i == n_bins - 1)) continue;
        const double y = h.center(i);
        if (!(y > -1.0 && y < 0.0)) continue;  // center pushed past a singular endpoint
        model.push_back(arcsine_density(y));
        counts.push_back(static_cast<double>(h.counts[i]));
    }
    if (model.size() < 3) throw std::domain_error("need at least 3 usable bins for the arcsine fit");
    return amplitude_least_squares(model, counts);
}

NormalFit fit_normal(const Histogram& h, const MomentStats& m) {
    if (!(m.sigma2 > 0.0)) throw std::domain_error("normal fit requires sigma2 > 0");
    std::vector<double> model(h.counts.size()), counts(h.counts.size());
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        const double d = h.center(i) - m.mu;
        model[i] = std::exp(-d * d / (2.0 * m.sigma2));
        counts[i] = static_cast<double>(h.counts[i]);
    }
    const AmplitudeFit f = amplitude_least_squares(model, counts);
    return {f.amplitude, m.mu, m.sigma2, f.rms_residual};
}

std::vector<VarianceScanPoint> variance_scan(std::span<const double> betas,
                                             const ModelParams& p_template,
                                             double delta_t, int n_samples) {
    if (betas.empty()) throw std::invalid_argument("beta grid must be nonempty");
    for (double b : betas)
        if (!(b > 0.0)) throw std::invalid_argument("beta grid values must be > 0");

    std::vector<VarianceScanPoint> out;
    out.reserve(betas.size());
    for (double b : betas) {
        ModelParams p = p_template;
        p.beta = b;
        const SampleSeries s = sample_series(p, BlochVector{}, delta_t, n_samples);
        out.push_back({b, sample_moments(s)});
    }
    return out;
}

PowerLawFit power_law_fit(std::span<const VarianceScanPoint> scan,
                          double fit_min, double fit_max) {
    if (!(fit_min > 0.0) || !(fit_max > fit_min))
        throw std::invalid_argument("fit range must satisfy 0 < fit_min < fit_max");

    std::vector<double> lx, ly;
    for (const auto& pt : scan) {
        if (pt.beta < fit_min || pt.beta > fit_max) continue;
        if (!(pt.stats.sigma2 > 0.0))
            throw std::domain_error("zero variance inside the power-law fit range");
        lx.push_back(std::log(pt.beta));
        ly.push_back(std::log(pt.stats.sigma2));
    }
    const std::size_t n = lx.size();
    if (n < 3) throw std::invalid_argument("need at least 3 scan points inside the fit range");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double dn = static_cast<double>(n);
    const double denom = dn * sxx - sx * sx;
    const double slope = (dn * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / dn;
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ly[i] - (intercept + slope * lx[i]);
        r2 += r * r;
    }
    return {std::exp(intercept), slope, std::sqrt(r2 / dn), fit_min, fit_max};
}

}  // namespace jcm
