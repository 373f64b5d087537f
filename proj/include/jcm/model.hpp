// Domain types for the thermal Jaynes-Cummings Bloch-vector toolkit:
// model parameters, truncation policy, Bloch vectors and the affine
// evolution-map coefficients.
#pragma once

#include <vector>

namespace jcm {

/// How the infinite photon-number sums are cut off.
///
/// fixed(N)      sums run up to index N inclusive (bit-faithful replication
///               of a stated cutoff).
/// adaptive(eps) picks the smallest N whose geometric tail bound
///               e^{-N b}/(1 - e^{-b}) falls below eps, where b is the
///               thermal exponent of the series. Requires b > 0.
struct TruncationPolicy {
    enum class Mode { fixed, adaptive };

    Mode mode = Mode::adaptive;
    int max_index = 0;       // fixed mode
    double epsilon = 1e-12;  // adaptive mode

    static TruncationPolicy fixed(int n);
    static TruncationPolicy adaptive(double eps);
};

inline TruncationPolicy default_truncation() { return TruncationPolicy::adaptive(1e-12); }

/// Physical configuration, hbar = 1. The coupling g is a constant,
/// independent of both frequencies. The detuning is always derived as
/// omega - omega0, never stored.
///
/// Two parameterizations are used throughout:
///  - general: beta, omega, omega0 and g carry their own units; thermal
///    weights are e^{-n beta omega} and time is in natural units.
///  - resonant reduced: time in units of 1/|g| and beta in units of
///    1/(hbar omega0). resonant(beta) builds params (omega = omega0 = g = 1)
///    for which both parameterizations coincide numerically.
struct ModelParams {
    double beta = 1.0;
    double omega = 1.0;
    double omega0 = 1.0;
    double g = 1.0;
    TruncationPolicy truncation = default_truncation();

    double delta_omega() const { return omega - omega0; }
    /// Exponent of the thermal weights e^{-n beta omega}.
    double thermal_exponent() const { return beta * omega; }
    /// Time rescaling into units of 1/|g|.
    double reduced_time(double t) const;

    /// Throws std::invalid_argument if beta < 0 or g == 0.
    void validate() const;

    static ModelParams resonant(double beta_reduced,
                                TruncationPolicy trunc = default_truncation());
};

/// Rabi-frequency-squared of the n-photon sector: (delta_omega/2)^2 + g^2 n.
double dtilde(int n, const ModelParams& p);

/// Summation cutoff for a series with thermal exponent b.
/// Throws std::domain_error in adaptive mode when b <= 0 (infinite
/// temperature has no convergent tail bound).
int truncation_order(double thermal_exponent, const TruncationPolicy& policy);
int truncation_order(const ModelParams& p);

/// Qubit state as a real 3-vector, |S| <= 1 for physical states.
struct BlochVector {
    double sx = 0.0;
    double sy = 0.0;
    double sz = 0.0;

    double norm() const;
};

/// Coefficients of the affine map S(t) = M S(0) + (0, 0, l4) with
///
///        [ l1   l2   0  ]
///   M =  [ -l2  l1   0  ],
///        [ 0    0    l3 ]
///
/// l2 vanishes identically on resonance. At t = 0 the map is the identity:
/// (l1, l2, l3, l4) = (1, 0, 1, 0).
struct EvolutionMatrix {
    double l1 = 1.0;
    double l2 = 0.0;
    double l3 = 1.0;
    double l4 = 0.0;
};

/// Applies the affine map. Preserves the unit ball up to roundoff;
/// callers validate |s0| <= 1.
BlochVector evolve_bloch(const BlochVector& s0, const EvolutionMatrix& m);

/// Time-indexed state sequence. Times strictly increasing, same length as
/// points.
struct Trajectory {
    std::vector<double> times;
    std::vector<BlochVector> points;
};

}  // namespace jcm
