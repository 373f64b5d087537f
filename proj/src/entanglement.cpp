#include "jcm/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace jcm {

using std::complex;
namespace {
constexpr complex<double> kI{0.0, 1.0};
}

ProjectedState projected_state(double t, double beta) {
    if (t < 0.0) throw std::invalid_argument("time must be >= 0");
    if (!(beta > 0.0))
        throw std::domain_error("projected state requires beta > 0 (prefactor degenerate)");

    const double e1 = std::exp(-beta);
    const double e2 = std::exp(-2.0 * beta);
    const double st = std::sin(t), ct = std::cos(t);
    const double sq2t = std::sqrt(2.0) * t;
    const double s2 = std::sin(sq2t), c2 = std::cos(sq2t);

    Matrix4c r;
    r(0, 0) = ct * ct + e1 * st * st;
    r(0, 1) = kI * e1 * st * c2;
    r(0, 2) = ct;
    r(0, 3) = kI * st * ct * (e1 - 1.0);
    r(1, 1) = e1 * c2 * c2 + e2 * s2 * s2;
    r(1, 2) = 0.0;
    r(1, 3) = e1 * ct * c2;
    r(2, 2) = 1.0;
    r(2, 3) = -kI * st;
    r(3, 3) = st * st + e1 * ct * ct;
    for (int i = 1; i < 4; ++i)
        for (int j = 0; j < i; ++j) r(i, j) = std::conj(r(j, i));

    ProjectedState ps;
    ps.matrix = 0.5 * (1.0 - e1) * r;
    ps.weight = ps.matrix.trace().real();
    ps.t = t;
    ps.beta = beta;
    return ps;
}

double projection_weight(double t, double beta) {
    if (!(beta > 0.0))
        throw std::domain_error("projection weight requires beta > 0");
    const double e1 = std::exp(-beta);
    const double e2 = std::exp(-2.0 * beta);
    return 0.25 * (1.0 - e1) *
           (4.0 + 3.0 * e1 + e2 + e1 * (1.0 - e1) * std::cos(2.0 * std::sqrt(2.0) * t));
}

Matrix4c normalize(const ProjectedState& ps) {
    if (!(ps.weight > 1e-300)) throw std::domain_error("projection weight is degenerate");
    return ps.matrix / ps.weight;
}

Matrix4c spin_flip(const Matrix4c& rho) {
    static const Matrix4c yy = [] {
        Matrix4c m = Matrix4c::Zero();
        m(0, 3) = -1.0;
        m(1, 2) = 1.0;
        m(2, 1) = 1.0;
        m(3, 0) = -1.0;
        return m;
    }();
    return yy * rho.conjugate() * yy;
}

EigenSystem4 hermitian_eigensystem(const Matrix4c& a_in) {
    Matrix4c a = 0.5 * (a_in + a_in.adjoint());
    Matrix4c v = Matrix4c::Identity();
    const double scale = std::max(1.0, a.norm());

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) < 1e-15 * scale) break;

        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag < 1e-300) continue;
                // Unitary rotation in the (p, q) plane zeroing a(p,q):
                // phase from the element, angle from tan(2 theta) = 2|m|/(a_pp - a_qq).
                const complex<double> phase = a(p, q) / mag;
                const double tau = (a(p, p).real() - a(q, q).real()) / (2.0 * mag);
                const double tt = (tau >= 0.0 ? 1.0 : -1.0) /
                                  (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + tt * tt);
                const double s = tt * c;

                Matrix4c j = Matrix4c::Identity();
                j(p, p) = c;
                j(q, q) = c;
                j(p, q) = -s * phase;
                j(q, p) = s * std::conj(phase);
                a = (j.adjoint() * a * j).eval();
                v = (v * j).eval();
            }
        }
    }

    EigenSystem4 out;
    out.vectors = v;
    for (int k = 0; k < 4; ++k) out.values[k] = a(k, k).real();
    return out;
}

Matrix4c matrix_sqrt_psd(const Matrix4c& rho) {
    EigenSystem4 es = hermitian_eigensystem(rho);
    Matrix4c d = Matrix4c::Zero();
    for (int k = 0; k < 4; ++k) {
        double lam = es.values[k];
        if (lam < -1e-8) throw std::domain_error("matrix is not positive semidefinite");
        if (lam < 0.0) lam = 0.0;
        d(k, k) = std::sqrt(lam);
    }
    return es.vectors * d * es.vectors.adjoint();
}

EntanglementResult concurrence(const Matrix4c& rho) {
    if ((rho - rho.adjoint()).norm() > 1e-9)
        throw std::invalid_argument("state must be Hermitian");
    if (std::abs(rho.trace().real() - 1.0) > 1e-9)
        throw std::invalid_argument("state must have unit trace");

    const Matrix4c root = matrix_sqrt_psd(rho);  // rejects non-PSD input
    const Matrix4c herm = root * spin_flip(rho) * root;
    EigenSystem4 es = hermitian_eigensystem(herm);

    std::array<double, 4> lam = es.values;
    std::sort(lam.begin(), lam.end(), std::greater<>());
    for (double& l : lam) {
        if (l < -1e-8) throw std::domain_error("spectrum of rho rho_tilde is not nonnegative");
        if (l < 0.0) l = 0.0;
    }
    const double c = std::sqrt(lam[0]) - std::sqrt(lam[1]) - std::sqrt(lam[2]) - std::sqrt(lam[3]);

    EntanglementResult r;
    r.lambdas = lam;
    r.concurrence = std::clamp(c, 0.0, 1.0);
    r.eof_normalized = eof_from_concurrence(r.concurrence);
    r.eof_lower_bound = r.eof_normalized;  // unit weight for a bare state
    return r;
}

double eof_from_concurrence(double c) {
    if (!(c >= 0.0 && c <= 1.0))
        throw std::invalid_argument("concurrence must lie in [0, 1]");
    if (c == 0.0) return 0.0;
    if (c == 1.0) return 1.0;
    const double x = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
    double h = 0.0;
    for (double p : {x, 1.0 - x})
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

EntanglementResult entanglement_lower_bound(double t, double beta) {
    const ProjectedState ps = projected_state(t, beta);
    EntanglementResult r = concurrence(normalize(ps));
    r.eof_lower_bound = ps.weight * r.eof_normalized;
    return r;
}

}  // namespace jcm
