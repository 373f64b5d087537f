#include "jcm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "jcm/averages.hpp"
#include "jcm/entanglement.hpp"
#include "jcm/fock_oracle.hpp"
#include "jcm/sampling.hpp"
#include "jcm/series.hpp"

namespace jcm {

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_bloch_dev(const BlochVector& a, const BlochVector& b) {
    return std::max({std::abs(a.sx - b.sx), std::abs(a.sy - b.sy), std::abs(a.sz - b.sz)});
}

// Map-level comparison through the basis initial states.
double map_vs_oracle_dev(const EvolutionMatrix& m, double t, const ModelParams& p, int dim) {
    const BlochVector bases[4] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    double worst = 0.0;
    for (const auto& s0 : bases) {
        const OracleResult o = oracle_reduced_state(t, p, dim, s0);
        worst = std::max(worst, max_bloch_dev(evolve_bloch(s0, m), o.bloch));
    }
    return worst;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
    std::vector<CheckResult> results;
    const auto add = [&results](std::string name, double dev, double tol) {
        results.push_back({std::move(name), dev, tol, dev <= tol});
    };
    const bool want_oracle = opts.checks == "all" || opts.checks == "oracle";
    const bool want_invariants = opts.checks == "all" || opts.checks == "invariants";
    const double times[3] = {0.3, 1.0, 5.0};

    if (want_oracle) {
        double dev_res = 0.0, dev_det = 0.0, dev_proj = 0.0;
        for (double beta : opts.betas) {
            const ModelParams res = ModelParams::resonant(beta);
            ModelParams det = res;
            det.omega = 2.0;  // detuning 1 at omega0 = 1
            const int dim_res = opts.fock_dim > 0 ? opts.fock_dim : required_fock_dim(res);
            const int dim_det = opts.fock_dim > 0 ? opts.fock_dim : required_fock_dim(det);
            MapEvaluator ev_res(res);
            GeneralEvaluator ev_det(det);
            for (double t : times) {
                dev_res = std::max(dev_res, map_vs_oracle_dev(ev_res.at(t), t, res, dim_res));
                dev_det = std::max(dev_det, map_vs_oracle_dev(ev_det.at(t), t, det, dim_det));
                const OracleResult o =
                    oracle_reduced_state(t, res, dim_res, BlochVector{1.0, 0.0, 0.0});
                const ProjectedState ps = projected_state(t, beta);
                dev_proj = std::max(dev_proj, (o.projection - ps.matrix).cwiseAbs().maxCoeff());
            }
        }
        add("oracle-bloch-resonant", dev_res, 1e-10);
        add("oracle-bloch-detuned", dev_det, 1e-10);
        add("oracle-projection", dev_proj, 1e-10);
    }

    if (want_invariants) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        {   // identity of the map at t = 0, within the truncation tail
            double dev = 0.0;
            for (double beta : {0.05, 0.5, 1.0, 5.0, 30.0}) {
                const EvolutionMatrix m = evolution_matrix_resonant(0.0, beta);
                dev = std::max({dev, std::abs(m.l1 - 1.0), std::abs(m.l2), std::abs(m.l3 - 1.0),
                                std::abs(m.l4)});
            }
            add("identity-at-origin", dev, 2e-12);
        }
        {   // |S(t)| stays in the unit ball
            double excess = 0.0;
            for (int k = 0; k < opts.random_cases; ++k) {
                const double beta = 0.05 + 20.0 * unit(rng);
                const double t = 20.0 * unit(rng);
                BlochVector s0{2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0,
                               2.0 * unit(rng) - 1.0};
                const double n = s0.norm();
                if (n > 1.0) {
                    const double shrink = unit(rng) / n;
                    s0 = {s0.sx * shrink, s0.sy * shrink, s0.sz * shrink};
                }
                const BlochVector s = evolve_bloch(s0, evolution_matrix_resonant(t, beta));
                excess = std::max(excess, s.norm() - 1.0);
            }
            add("ball-preservation", std::max(excess, 0.0), 1e-9);
        }
        {   // -1 <= L4 <= 0 and |L1|, |L3| <= 1 on resonance
            double dev = 0.0;
            for (int k = 0; k < 400; ++k) {
                const double beta = 0.05 + 15.0 * unit(rng);
                const double t = 25.0 * unit(rng);
                const EvolutionMatrix m = evolution_matrix_resonant(t, beta);
                dev = std::max({dev, m.l4, -1.0 - m.l4, std::abs(m.l1) - 1.0,
                                std::abs(m.l3) - 1.0});
            }
            add("resonant-bounds", std::max(dev, 0.0), 1e-9);
        }
        {   // detuned evaluator specializes to the resonant one
            double dev = 0.0;
            for (double beta : {0.5, 1.0, 2.0}) {
                const ModelParams p = ModelParams::resonant(beta);
                GeneralEvaluator gen(p);
                ResonantEvaluator res(beta, p.truncation);
                for (double t : times) {
                    const EvolutionMatrix a = gen.at(t), b = res.at(t);
                    dev = std::max({dev, std::abs(a.l1 - b.l1), std::abs(a.l2),
                                    std::abs(a.l3 - b.l3), std::abs(a.l4 - b.l4)});
                }
            }
            add("resonant-specialization", dev, 1e-12);
        }
        {   // doubling a fixed cutoff moves the sums less than the tail bound
            const double beta = 0.5, t = 3.0;
            const int n = 20;
            const EvolutionMatrix a = evolution_matrix_resonant(t, beta, TruncationPolicy::fixed(n));
            const EvolutionMatrix b =
                evolution_matrix_resonant(t, beta, TruncationPolicy::fixed(2 * n));
            const double bound = std::exp(-beta * n) / (1.0 - std::exp(-beta));
            const double moved = std::max({std::abs(a.l1 - b.l1), std::abs(a.l3 - b.l3),
                                           std::abs(a.l4 - b.l4)});
            add("truncation-doubling", moved, bound);
        }
        {   // trace of the projected state against the closed-form weight
            double dev = 0.0;
            for (double beta : opts.betas)
                for (int k = 0; k <= 600; ++k) {
                    const double t = 2.0 * kPi * k / 600.0;
                    dev = std::max(dev, std::abs(projected_state(t, beta).weight -
                                                 projection_weight(t, beta)));
                }
            add("projection-trace-identity", dev, 1e-12);
        }
        {   // sigma_AF stays PSD and the bound chain 0 <= pE <= p <= 1 holds
            double dev = 0.0;
            for (int k = 0; k < 300; ++k) {
                const double beta = 0.1 + 10.0 * unit(rng);
                const double t = 2.0 * kPi * unit(rng);
                const ProjectedState ps = projected_state(t, beta);
                const EigenSystem4 es = hermitian_eigensystem(normalize(ps));
                const double min_eig = *std::min_element(es.values.begin(), es.values.end());
                const EntanglementResult r = entanglement_lower_bound(t, beta);
                dev = std::max({dev, -min_eig - 1e-10, -r.concurrence, r.concurrence - 1.0,
                                -r.eof_lower_bound, r.eof_lower_bound - ps.weight,
                                ps.weight - 1.0});
            }
            add("projected-state-psd-bounds", std::max(dev, 0.0), 1e-12);
        }
        {   // Werner state at p = 1/2: concurrence 1/4
            Matrix4c bell = Matrix4c::Zero();
            const double h = 0.5;
            bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = h;
            const Matrix4c w = 0.5 * bell + 0.125 * Matrix4c::Identity();
            add("werner-concurrence", std::abs(concurrence(w).concurrence - 0.25), 1e-12);
        }
        {   // entanglement of formation endpoints are exact
            const double dev =
                std::max(std::abs(eof_from_concurrence(0.0)), std::abs(eof_from_concurrence(1.0) - 1.0));
            add("eof-endpoints", dev, 0.0);
        }
        {   // histogram bookkeeping conserves samples
            const ModelParams p = ModelParams::resonant(1.0);
            const SampleSeries s = sample_series(p, BlochVector{}, 0.05, 2000);
            const Histogram hgram = build_histogram(s, 0.0035);
            add("histogram-conservation",
                std::abs(static_cast<double>(hgram.total()) - static_cast<double>(s.values.size())),
                0.0);
        }
        {   // finite-horizon average approaches the closed form
            const BlochVector avg =
                time_average_numeric(BlochVector{}, ModelParams::resonant(1.0), 500.0, 0.05);
            const TimeAverages closed = time_average_closed_resonant(1.0);
            add("numeric-average-consistency", std::abs(avg.sz - closed.avg_l4), 5e-3);
        }
    }

    return results;
}

}  // namespace jcm
