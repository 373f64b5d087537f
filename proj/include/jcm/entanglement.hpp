// Projected atom-field state on the two lowest photon levels, its Wootters
// concurrence and entanglement of formation, and the resulting lower bound
// on the atom-field entanglement.
//
// Reduced units throughout: t in 1/g (g > 0), beta in 1/(hbar omega), on
// resonance, with the atom prepared in (|0> + |1>)/sqrt(2), i.e.
// S(0) = (1, 0, 0).
#pragma once

#include <Eigen/Dense>
#include <array>

namespace jcm {

/// 4x4 complex matrix in the product basis {|0a 0f>, |0a 1f>, |1a 0f>, |1a 1f>}.
using Matrix4c = Eigen::Matrix4cd;

/// Unnormalized projection R of the evolved atom-field state onto the
/// field subspace spanned by the photon-number states |0> and |1>, with
/// weight = Tr R, the probability of finding the field there.
struct ProjectedState {
    Matrix4c matrix;
    double weight = 0.0;
    double t = 0.0;
    double beta = 0.0;
};

/// Closed-form R(t); requires t >= 0 and beta > 0.
ProjectedState projected_state(double t, double beta);

/// Tr R(t) in closed form:
/// (1/4)(1-e^{-b})[4 + 3 e^{-b} + e^{-2b} + e^{-b}(1-e^{-b}) cos(2 sqrt(2) t)].
double projection_weight(double t, double beta);

/// R / Tr R; throws if the weight is degenerate.
Matrix4c normalize(const ProjectedState& ps);

/// rho_tilde = (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
Matrix4c spin_flip(const Matrix4c& rho);

/// lambdas: eigenvalues of rho * rho_tilde, sorted descending and clamped
/// at zero. concurrence = max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)}.
/// eof_normalized = E(concurrence); eof_lower_bound additionally carries the
/// projection weight when produced by entanglement_lower_bound.
struct EntanglementResult {
    std::array<double, 4> lambdas{};
    double concurrence = 0.0;
    double eof_normalized = 0.0;
    double eof_lower_bound = 0.0;
};

/// Wootters concurrence of a unit-trace Hermitian PSD 4x4 state. The
/// spectrum of rho rho_tilde is obtained from the Hermitian equivalent
/// sqrt(rho) rho_tilde sqrt(rho), which shares it and stays real and
/// nonnegative numerically.
EntanglementResult concurrence(const Matrix4c& rho);

/// E(C): binary entropy of (1 + sqrt(1 - C^2))/2, with E(0) = 0, E(1) = 1.
double eof_from_concurrence(double c);

/// Full pipeline: projected_state -> normalize -> concurrence -> E(C),
/// with eof_lower_bound = weight * E(C). Zero at t = 0 for every beta
/// (the initial state is separable).
EntanglementResult entanglement_lower_bound(double t, double beta);

/// Eigen-decomposition of a 4x4 Hermitian matrix by cyclic Jacobi rotations.
/// values[k] pairs with the k-th column of vectors; unsorted.
struct EigenSystem4 {
    std::array<double, 4> values{};
    Matrix4c vectors;
};

EigenSystem4 hermitian_eigensystem(const Matrix4c& a);

/// PSD square root via the Jacobi eigensystem, clamping eigenvalues
/// within -1e-8 of zero; more negative input spectra are rejected.
Matrix4c matrix_sqrt_psd(const Matrix4c& rho);

}  // namespace jcm
