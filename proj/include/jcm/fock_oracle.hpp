// Brute-force verifier: evolves the atom and a truncated Fock-space thermal
// field exactly with the sector-structured propagator, then reduces to the
// quantities the series code predicts. Independent of every series
// evaluation path, so agreement is a real check.
#pragma once

#include "jcm/entanglement.hpp"
#include "jcm/model.hpp"

namespace jcm {

struct OracleResult {
    /// Projection of the evolved joint state onto field levels {0, 1},
    /// in the basis {|0a 0f>, |0a 1f>, |1a 0f>, |1a 1f>}.
    Matrix4c projection;
    /// Bloch vector of the field-traced atom state.
    BlochVector bloch;
};

/// Smallest Fock dimension whose thermal tail weight e^{-D beta omega}
/// stays below tail_eps.
int required_fock_dim(const ModelParams& p, double tail_eps = 1e-12);

/// Exact evolution of rho_atom(s0) x rho_thermal on a fock_dim-level field.
/// Throws if fock_dim is too small for the requested temperature (message
/// names the required dimension). t is in the natural units of the params.
OracleResult oracle_reduced_state(double t, const ModelParams& p, int fock_dim,
                                  const BlochVector& s0 = {1.0, 0.0, 0.0});

}  // namespace jcm
