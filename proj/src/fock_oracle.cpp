#include "jcm/fock_oracle.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "jcm/numerics.hpp"

namespace jcm {

using std::complex;

int required_fock_dim(const ModelParams& p, double tail_eps) {
    p.validate();
    const double b = p.thermal_exponent();
    if (!(b > 0.0))
        throw std::domain_error("no finite Fock truncation at infinite temperature");
    int d = static_cast<int>(std::ceil(-std::log(tail_eps) / b));
    if (d < 2) d = 2;
    while (std::exp(-b * d) >= tail_eps) ++d;
    while (d > 2 && std::exp(-b * (d - 1)) < tail_eps) --d;
    return d;
}

OracleResult oracle_reduced_state(double t, const ModelParams& p, int fock_dim,
                                  const BlochVector& s0) {
    p.validate();
    if (t < 0.0) throw std::invalid_argument("time must be >= 0");
    if (fock_dim < 2) throw std::invalid_argument("fock_dim must be >= 2");
    if (s0.norm() > 1.0 + 1e-9)
        throw std::invalid_argument("initial Bloch vector must lie in the unit ball");
    const int needed = required_fock_dim(p);
    if (fock_dim < needed)
        throw std::domain_error("fock_dim " + std::to_string(fock_dim) +
                                " insufficient for thermal tail; need at least " +
                                std::to_string(needed));

    // One workspace level above the populated ones: the top populated level
    // |0a, fock_dim-1> exchanges with |1a, fock_dim>, so that sector must be
    // complete for the retained weight to evolve exactly. The only
    // approximation left is the discarded initial tail itself.
    const int f = fock_dim + 1;
    const int dim = 2 * f;
    const double dw = p.delta_omega();
    const double g = p.g;
    const auto idx = [f](int atom, int n) { return atom * f + n; };
    const auto dt_of = [&](int n) { return 0.25 * dw * dw + g * g * n; };

    // Propagator: each column holds the diagonal phase-like element plus at
    // most one excitation-exchange element.
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
    const complex<double> ii{0.0, 1.0};
    for (int n = 0; n < f; ++n) {
        const double d1 = dt_of(n + 1);
        const double snc1 = sin_sqrt_over_sqrt(d1, t);
        u(idx(0, n), idx(0, n)) = std::cos(std::sqrt(d1) * t) - 0.5 * ii * dw * snc1;
        if (n + 1 < f)
            u(idx(1, n + 1), idx(0, n)) = ii * g * std::sqrt(n + 1.0) * snc1;

        const double d0 = dt_of(n);
        const double snc0 = sin_sqrt_over_sqrt(d0, t);
        u(idx(1, n), idx(1, n)) = std::cos(std::sqrt(d0) * t) + 0.5 * ii * dw * snc0;
        if (n >= 1)
            u(idx(0, n - 1), idx(1, n)) = ii * g * std::sqrt(static_cast<double>(n)) * snc0;
    }

    // rho(0) = rho_atom x thermal field, field-diagonal, populated up to
    // fock_dim - 1; the workspace level starts empty.
    const double b = p.thermal_exponent();
    Eigen::Matrix2cd rho_a;
    rho_a << 0.5 * (1.0 + s0.sz), 0.5 * (s0.sx - ii * s0.sy),
             0.5 * (s0.sx + ii * s0.sy), 0.5 * (1.0 - s0.sz);
    Eigen::MatrixXcd rho0 = Eigen::MatrixXcd::Zero(dim, dim);
    const double pref = 1.0 - std::exp(-b);
    for (int n = 0; n < fock_dim; ++n) {
        const double w = pref * std::exp(-b * n);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) rho0(idx(i, n), idx(j, n)) = rho_a(i, j) * w;
    }

    const Eigen::MatrixXcd rho = u * rho0 * u.adjoint();

    OracleResult out;
    Eigen::Matrix2cd reduced = Eigen::Matrix2cd::Zero();
    for (int n = 0; n < f; ++n)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) reduced(i, j) += rho(idx(i, n), idx(j, n));
    out.bloch = {2.0 * reduced(0, 1).real(), -2.0 * reduced(0, 1).imag(),
                 (reduced(0, 0) - reduced(1, 1)).real()};

    const int basis[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out.projection(r, c) = rho(idx(basis[r][0], basis[r][1]), idx(basis[c][0], basis[c][1]));
    return out;
}

}  // namespace jcm
