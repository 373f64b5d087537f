// Truncated photon-number series for the affine Bloch-vector evolution map,
// resonant and detuned, plus trajectory generation.
#pragma once

#include <memory>
#include <span>

#include "jcm/model.hpp"

namespace jcm {

/// Resonant map coefficients in reduced units (t in 1/|g|, beta in
/// 1/(hbar omega0)):
///
///   L1(t) = (1-e^-b) sum_{n>=0} cos(sqrt(n+1) t) cos(sqrt(n) t) e^{-n b}
///   L3(t) = (1-e^-b)/2 + sinh(b) sum_{m>=1} cos(2 sqrt(m) t) e^{-m b}
///   L4(t) = -(1-e^-b)/2 + [(e^b-1)^2 / 2e^b] sum_{m>=1} cos(2 sqrt(m) t) e^{-m b}
///
/// L2 vanishes identically. Thermal weights and sqrt tables are precomputed
/// once per (beta, policy), so repeated evaluation over a time grid is cheap.
///
/// beta = 0 is accepted in fixed mode only and yields the zero map for
/// every t (all series prefactors vanish); adaptive mode rejects it.
class ResonantEvaluator {
public:
    ResonantEvaluator(double beta, TruncationPolicy policy);

    EvolutionMatrix at(double t) const;
    int order() const { return order_; }
    double beta() const { return beta_; }

private:
    double beta_;
    double pref_;  // 1 - e^{-beta}
    int order_;
    std::vector<double> sqrt_n_;  // sqrt(n), n = 0..N+1
    std::vector<double> w1_;      // e^{-n beta}, n = 0..N
    std::vector<double> c3_;      // cos-series coefficients of L3, m = 1..N
    std::vector<double> c4_;      // cos-series coefficients of L4, m = 1..N
};

/// Detuned map coefficients in natural units (hbar = 1, thermal weights
/// e^{-n beta omega}). The four coefficients come from the atom-propagator
/// elements
///
///   l1 = Re A0101,  l2 = Im A0101,
///   l3 = A0000 - A1100,  l4 = A0000 + A1100 - 1,
///
/// each an n-sum over photon sectors with Rabi frequencies sqrt(Dtilde(n)).
class GeneralEvaluator {
public:
    explicit GeneralEvaluator(const ModelParams& p);

    EvolutionMatrix at(double t) const;
    int order() const { return order_; }

private:
    double half_dw_;
    double g2_;
    double pref_;  // 1 - e^{-beta omega}
    int order_;
    std::vector<double> w_;        // e^{-n beta omega}, n = 0..N
    std::vector<double> dt_;       // Dtilde(n), n = 0..N+1
    std::vector<double> sq_dt_;    // sqrt(Dtilde(n))
};

/// Dispatches to the resonant fast path when delta_omega == 0 (converting
/// t -> |g| t and beta -> beta omega) and to the detuned series otherwise.
/// Time arguments are in the natural units of the params.
class MapEvaluator {
public:
    explicit MapEvaluator(const ModelParams& p);

    EvolutionMatrix at(double t) const;
    int order() const;

private:
    double g_abs_ = 1.0;
    std::unique_ptr<ResonantEvaluator> resonant_;
    std::unique_ptr<GeneralEvaluator> general_;
};

/// One-shot evaluations (construct an evaluator for repeated use instead).
EvolutionMatrix evolution_matrix_resonant(double t, double beta,
                                          TruncationPolicy policy = default_truncation());
EvolutionMatrix evolution_matrix_general(double t, const ModelParams& p);
EvolutionMatrix evolution_matrix(double t, const ModelParams& p);

/// Pointwise map application over a strictly increasing grid of times >= 0.
/// Each point is evolved directly from t = 0; the map family is not a
/// semigroup, so stepwise propagation would be wrong.
Trajectory trajectory(const BlochVector& s0, std::span<const double> t_grid,
                      const ModelParams& p);

}  // namespace jcm
