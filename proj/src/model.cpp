#include "jcm/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jcm {

TruncationPolicy TruncationPolicy::fixed(int n) {
    if (n < 1) throw std::invalid_argument("fixed truncation requires N >= 1");
    TruncationPolicy p;
    p.mode = Mode::fixed;
    p.max_index = n;
    return p;
}

TruncationPolicy TruncationPolicy::adaptive(double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("adaptive truncation requires epsilon in (0, 1)");
    TruncationPolicy p;
    p.mode = Mode::adaptive;
    p.epsilon = eps;
    return p;
}

double ModelParams::reduced_time(double t) const { return std::abs(g) * t; }

void ModelParams::validate() const {
    if (beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    if (g == 0.0) throw std::invalid_argument("coupling g must be nonzero");
    if (!(omega > 0.0)) throw std::invalid_argument("field frequency omega must be > 0");
}

ModelParams ModelParams::resonant(double beta_reduced, TruncationPolicy trunc) {
    ModelParams p;
    p.beta = beta_reduced;
    p.omega = 1.0;
    p.omega0 = 1.0;
    p.g = 1.0;
    p.truncation = trunc;
    p.validate();
    return p;
}

double dtilde(int n, const ModelParams& p) {
    if (n < 0) throw std::invalid_argument("dtilde requires n >= 0");
    const double half_dw = 0.5 * p.delta_omega();
    return half_dw * half_dw + p.g * p.g * static_cast<double>(n);
}

int truncation_order(double thermal_exponent, const TruncationPolicy& policy) {
    if (policy.mode == TruncationPolicy::Mode::fixed) return policy.max_index;
    const double b = thermal_exponent;
    if (!(b > 0.0))
        throw std::domain_error("adaptive truncation undefined at infinite temperature");
    // smallest N with e^{-N b} / (1 - e^{-b}) < eps; closed-form seed, then
    // adjust against the exact bound to be safe across rounding.
    const double eps = policy.epsilon;
    const auto bound = [b](int n) { return std::exp(-b * n) / (1.0 - std::exp(-b)); };
    int n = static_cast<int>(std::ceil(-std::log(eps * (1.0 - std::exp(-b))) / b));
    if (n < 1) n = 1;
    while (bound(n) >= eps) ++n;
    while (n > 1 && bound(n - 1) < eps) --n;
    return n;
}

int truncation_order(const ModelParams& p) {
    return truncation_order(p.thermal_exponent(), p.truncation);
}

double BlochVector::norm() const { return std::sqrt(sx * sx + sy * sy + sz * sz); }

BlochVector evolve_bloch(const BlochVector& s0, const EvolutionMatrix& m) {
    return {m.l1 * s0.sx + m.l2 * s0.sy,
            -m.l2 * s0.sx + m.l1 * s0.sy,
            m.l3 * s0.sz + m.l4};
}

}  // namespace jcm
