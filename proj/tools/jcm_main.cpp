// jcm: command-line front end. Every subcommand writes CSV suitable for
// external plotting; the verify subcommand prints a self-check report.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jcm/averages.hpp"
#include "jcm/csv.hpp"
#include "jcm/entanglement.hpp"
#include "jcm/fock_oracle.hpp"
#include "jcm/sampling.hpp"
#include "jcm/series.hpp"
#include "jcm/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

struct CommonOpts {
    std::string truncation = "adaptive:1e-12";
    int precision = 12;
    std::string output;
};

jcm::TruncationPolicy parse_truncation(const std::string& s) {
    const auto colon = s.find(':');
    const std::string kind = s.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    try {
        if (kind == "fixed") return jcm::TruncationPolicy::fixed(std::stoi(arg));
        if (kind == "adaptive") return jcm::TruncationPolicy::adaptive(std::stod(arg));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw CLI::ValidationError("--truncation", "expected fixed:<N> or adaptive:<eps>");
}

jcm::BlochVector parse_s0(const std::string& s) {
    jcm::BlochVector v;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &v.sx, &v.sy, &v.sz) != 3)
        throw CLI::ValidationError("--s0", "expected sx,sy,sz");
    if (v.norm() > 1.0 + 1e-9)
        throw CLI::ValidationError("--s0", "initial Bloch vector must lie in the unit ball");
    return v;
}

void apply_thread_cap() {
#ifdef _OPENMP
    if (const char* env = std::getenv("JCM_THREADS")) {
        const int n = std::atoi(env);
        omp_set_num_threads(n > 0 ? n : omp_get_num_procs());
    }
#endif
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n == 1 ? lo : lo + (hi - lo) * i / static_cast<double>(n - 1);
    return v;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v = linspace(std::log(lo), std::log(hi), n);
    for (double& x : v) x = std::exp(x);
    return v;
}

// ---------------------------------------------------------------- trajectory
int cmd_trajectory(const CommonOpts& common, double beta, const std::string& s0_str,
                   double t_max, double dt, double delta_omega, double g, double omega0) {
    const jcm::BlochVector s0 = parse_s0(s0_str);
    jcm::ModelParams p;
    p.beta = beta;
    p.omega0 = omega0;
    p.omega = omega0 + delta_omega;
    p.g = g;
    p.truncation = parse_truncation(common.truncation);

    const int n = static_cast<int>(std::floor(t_max / dt + 1e-9));
    std::vector<double> grid(n + 1);
    for (int i = 0; i <= n; ++i) grid[i] = dt * i;

    const jcm::Trajectory traj = jcm::trajectory(s0, grid, p);
    jcm::CsvWriter csv(common.output.empty() ? "trajectory.csv" : common.output,
                       common.precision);
    csv.header({"t", "sx", "sy", "sz"});
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        csv.row({traj.times[i], traj.points[i].sx, traj.points[i].sy, traj.points[i].sz});
    return 0;
}

// ------------------------------------------------------------------- average
int cmd_average(const CommonOpts& common, std::vector<double> betas, bool beta_inf,
                double delta_omega, double g, double omega0, bool numeric_check,
                double t_max, double step) {
    jcm::ModelParams base;
    base.omega0 = omega0;
    base.omega = omega0 + delta_omega;
    base.g = g;
    base.truncation = parse_truncation(common.truncation);
    const bool general = delta_omega != 0.0;

    jcm::CsvWriter csv(common.output.empty() ? "averages.csv" : common.output,
                       common.precision);
    if (general)
        csv.header({"beta", "delta_omega", "avg_l1", "avg_l3", "avg_l4"});
    else if (numeric_check)
        csv.header({"beta", "avg_l1", "avg_l3", "avg_l4", "numeric_l3", "numeric_l4",
                    "dev_l3", "dev_l4"});
    else
        csv.header({"beta", "avg_l1", "avg_l3", "avg_l4"});

    if (beta_inf) {
        const auto [high_t, low_t] = jcm::time_average_limits(base);
        if (general)
            csv.row({std::numeric_limits<double>::infinity(), delta_omega, low_t.avg_l1,
                     low_t.avg_l3, low_t.avg_l4});
        else
            csv.row({std::numeric_limits<double>::infinity(), low_t.avg_l1, low_t.avg_l3,
                     low_t.avg_l4});
        return 0;
    }
    if (betas.empty()) throw CLI::ValidationError("--beta", "beta grid is empty");

    for (double beta : betas) {
        jcm::ModelParams p = base;
        p.beta = beta;
        const jcm::TimeAverages a = general ? jcm::time_average_closed_general(p)
                                            : jcm::time_average_closed_resonant(beta);
        if (general) {
            csv.row({beta, delta_omega, a.avg_l1, a.avg_l3, a.avg_l4});
        } else if (numeric_check) {
            const jcm::BlochVector z0 =
                jcm::time_average_numeric(jcm::BlochVector{}, p, t_max, step);
            const jcm::BlochVector z1 =
                jcm::time_average_numeric(jcm::BlochVector{0, 0, 1}, p, t_max, step);
            const double num_l4 = z0.sz;
            const double num_l3 = z1.sz - z0.sz;
            csv.row({beta, a.avg_l1, a.avg_l3, a.avg_l4, num_l3, num_l4,
                     std::abs(num_l3 - a.avg_l3), std::abs(num_l4 - a.avg_l4)});
        } else {
            csv.row({beta, a.avg_l1, a.avg_l3, a.avg_l4});
        }
    }
    return 0;
}

// ----------------------------------------------------------------- histogram
int cmd_histogram(const CommonOpts& common, double beta, double dt, int samples,
                  double class_interval, const std::string& fit,
                  std::string fit_output) {
    const jcm::ModelParams p =
        jcm::ModelParams::resonant(beta, parse_truncation(common.truncation));
    const jcm::SampleSeries series =
        jcm::sample_series(p, jcm::BlochVector{}, dt, samples - 1);
    const jcm::Histogram h = jcm::build_histogram(series, class_interval);
    const jcm::MomentStats m = jcm::sample_moments(series);

    const std::string out = common.output.empty() ? "histogram.csv" : common.output;
    {
        jcm::CsvWriter csv(out, common.precision);
        csv.comment("beta = " + jcm::format_double(beta, common.precision) +
                    ", dt = " + jcm::format_double(dt, common.precision) +
                    ", samples = " + std::to_string(samples));
        csv.comment("mu = " + jcm::format_double(m.mu, common.precision) +
                    ", sigma2 = " + jcm::format_double(m.sigma2, common.precision) +
                    ", skewness = " + jcm::format_double(m.skewness, common.precision));
        csv.header({"bin_left", "count"});
        for (std::size_t i = 0; i < h.counts.size(); ++i)
            csv.row({h.bin_left_edges[i], static_cast<double>(h.counts[i])});
    }
    if (fit == "none") return 0;

    if (fit_output.empty()) {
        const auto dot = out.rfind('.');
        fit_output = (dot == std::string::npos ? out : out.substr(0, dot)) + "_fit.csv";
    }
    jcm::CsvWriter csv(fit_output, common.precision);
    const double lo = h.center(0), hi = h.center(h.counts.size() - 1);
    if (fit == "arcsine") {
        const jcm::AmplitudeFit f = jcm::fit_arcsine_amplitude(h);
        csv.comment("fit = arcsine: a / sqrt(1 - (2y+1)^2)");
        csv.comment("a = " + jcm::format_double(f.amplitude, common.precision));
        csv.comment("rms_residual = " + jcm::format_double(f.rms_residual, common.precision));
        csv.header({"y", "fitted_value"});
        for (double y : linspace(std::max(lo, -1.0 + 1e-9), std::min(hi, -1e-9), 512))
            csv.row({y, f.amplitude * jcm::arcsine_density(y)});
    } else {  // normal
        const jcm::NormalFit f = jcm::fit_normal(h, m);
        csv.comment("fit = normal: a * exp(-(y-mu)^2 / (2 sigma2))");
        csv.comment("a = " + jcm::format_double(f.amplitude, common.precision));
        csv.comment("mu = " + jcm::format_double(f.mu, common.precision) +
                    ", sigma2 = " + jcm::format_double(f.sigma2, common.precision));
        csv.comment("rms_residual = " + jcm::format_double(f.rms_residual, common.precision));
        csv.header({"y", "fitted_value"});
        for (double y : linspace(lo, hi, 512)) {
            const double d = y - f.mu;
            csv.row({y, f.amplitude * std::exp(-d * d / (2.0 * f.sigma2))});
        }
    }
    return 0;
}

// ------------------------------------------------------------- variance-scan
int cmd_variance_scan(const CommonOpts& common, std::vector<double> betas,
                      double beta_min, double beta_max, int points, double dt,
                      int samples, const std::string& fit_range) {
    if (betas.empty()) betas = logspace(beta_min, beta_max, points);
    jcm::ModelParams tmpl =
        jcm::ModelParams::resonant(1.0, parse_truncation(common.truncation));
    const auto scan = jcm::variance_scan(betas, tmpl, dt, samples - 1);

    jcm::CsvWriter csv(common.output.empty() ? "variance_scan.csv" : common.output,
                       common.precision);
    csv.header({"beta", "mu", "sigma2"});
    for (const auto& pt : scan) csv.row({pt.beta, pt.stats.mu, pt.stats.sigma2});

    if (!fit_range.empty()) {
        double lo = 0.0, hi = 0.0;
        if (std::sscanf(fit_range.c_str(), "%lf:%lf", &lo, &hi) != 2)
            throw CLI::ValidationError("--fit-range", "expected lo:hi");
        const jcm::PowerLawFit f = jcm::power_law_fit(scan, lo, hi);
        csv.comment("power-law fit sigma2(beta) = c1 * beta^c2 over [" +
                    jcm::format_double(lo, common.precision) + ", " +
                    jcm::format_double(hi, common.precision) + "]");
        csv.comment("c1 = " + jcm::format_double(f.c1, common.precision));
        csv.comment("c2 = " + jcm::format_double(f.c2, common.precision));
        csv.comment("rms_log_residual = " +
                    jcm::format_double(f.rms_log_residual, common.precision));
    }
    return 0;
}

// -------------------------------------------------------------- entanglement
int cmd_entanglement(const CommonOpts& common, std::vector<double> betas,
                     double t_max, int points) {
    if (betas.empty()) throw std::invalid_argument("beta list is empty");
    for (double beta : betas)
        if (!(beta > 0.0))
            throw std::domain_error("entanglement sweep requires beta > 0 (prefactor degenerate)");
    jcm::CsvWriter csv(common.output.empty() ? "entanglement.csv" : common.output,
                       common.precision);
    const bool multi = betas.size() > 1;
    if (multi)
        csv.header({"beta", "t", "p_af", "concurrence", "eof_lower_bound"});
    else
        csv.header({"t", "p_af", "concurrence", "eof_lower_bound"});

    const std::vector<double> grid = linspace(0.0, t_max, points);
    for (double beta : betas) {
        std::vector<jcm::EntanglementResult> res(grid.size());
        std::vector<double> weights(grid.size());
        const auto count = static_cast<std::ptrdiff_t>(grid.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            res[i] = jcm::entanglement_lower_bound(grid[i], beta);
            weights[i] = jcm::projection_weight(grid[i], beta);
        }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (multi)
                csv.row({beta, grid[i], weights[i], res[i].concurrence, res[i].eof_lower_bound});
            else
                csv.row({grid[i], weights[i], res[i].concurrence, res[i].eof_lower_bound});
        }
    }
    return 0;
}

// -------------------------------------------------------------------- verify
int cmd_verify(const std::string& checks, std::vector<double> betas, int fock_dim,
               unsigned int seed, int cases) {
    jcm::VerifyOptions opts;
    opts.checks = checks;
    if (!betas.empty()) opts.betas = std::move(betas);
    opts.fock_dim = fock_dim;
    opts.seed = seed;
    opts.random_cases = cases;

    const auto results = jcm::run_verification(opts);
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%-32s deviation %-12.3e tolerance %-12.3e %s\n", r.name.c_str(),
                    r.deviation, r.tolerance, r.pass ? "PASS" : "FAIL");
        all_pass = all_pass && r.pass;
    }
    std::printf("%zu checks, %s\n", results.size(), all_pass ? "all passed" : "FAILURES present");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap();

    CLI::App app{"Thermal Jaynes-Cummings Bloch-vector toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    int rc = 0;
    CommonOpts common;
    app.add_option("--truncation", common.truncation,
                   "series cutoff: fixed:<N> or adaptive:<eps>");
    app.add_option("--precision", common.precision, "CSV significant digits")
        ->check(CLI::Range(1, 17));
    app.add_option("-o,--output", common.output, "output CSV path");

    // trajectory
    double tr_beta = 0.5, tr_tmax = 100.0, tr_dt = 0.01, tr_dw = 0.0, tr_g = 1.0,
           tr_w0 = 1.0;
    std::string tr_s0 = "1,0,0";
    auto* tr = app.add_subcommand("trajectory", "Bloch trajectory CSV (t, sx, sy, sz)");
    tr->add_option("--beta", tr_beta, "inverse temperature")->check(CLI::NonNegativeNumber);
    tr->add_option("--s0", tr_s0, "initial Bloch vector sx,sy,sz");
    tr->add_option("--t-max", tr_tmax, "final time")->check(CLI::PositiveNumber);
    tr->add_option("--dt", tr_dt, "grid step")->check(CLI::PositiveNumber);
    tr->add_option("--delta-omega", tr_dw, "detuning omega - omega0");
    tr->add_option("--g", tr_g, "coupling constant");
    tr->add_option("--omega0", tr_w0, "atomic gap frequency");
    tr->callback([&] {
        if (app.count("--truncation") == 0) common.truncation = "fixed:500";
        rc = cmd_trajectory(common, tr_beta, tr_s0, tr_tmax, tr_dt, tr_dw, tr_g, tr_w0);
    });

    // average
    std::vector<double> av_betas;
    bool av_inf = false, av_numeric = false;
    double av_dw = 0.0, av_g = 1.0, av_w0 = 1.0, av_tmax = 2000.0, av_step = 0.05;
    auto* av = app.add_subcommand("average", "time-averaged map coefficients CSV");
    av->add_option("--beta", av_betas, "inverse temperatures")->delimiter(',');
    av->add_flag("--beta-inf", av_inf, "emit the beta -> infinity limit row");
    av->add_option("--delta-omega", av_dw, "detuning (0 selects the resonant closed form)");
    av->add_option("--g", av_g, "coupling constant");
    av->add_option("--omega0", av_w0, "atomic gap frequency");
    av->add_flag("--numeric-check", av_numeric,
                 "append finite-horizon averages and deviations (resonant mode)");
    av->add_option("--t-max", av_tmax, "numeric-check horizon")->check(CLI::PositiveNumber);
    av->add_option("--step", av_step, "numeric-check grid step")->check(CLI::PositiveNumber);
    av->callback([&] {
        rc = cmd_average(common, av_betas, av_inf, av_dw, av_g, av_w0, av_numeric, av_tmax,
                         av_step);
    });

    // histogram
    double hg_beta = 10.0, hg_dt = 0.05, hg_dy = 0.005;
    int hg_samples = 10000;
    std::string hg_fit = "arcsine", hg_fit_out;
    auto* hg = app.add_subcommand("histogram", "Sz sample histogram and density-fit CSVs");
    hg->add_option("--beta", hg_beta, "inverse temperature")->check(CLI::PositiveNumber);
    hg->add_option("--dt", hg_dt, "sampling interval")->check(CLI::PositiveNumber);
    hg->add_option("--samples", hg_samples, "number of samples (N+1)")
        ->check(CLI::Range(2, 100000000));
    hg->add_option("--class-interval", hg_dy, "bin width")->check(CLI::PositiveNumber);
    hg->add_option("--fit", hg_fit, "density fit: arcsine, normal or none")
        ->check(CLI::IsMember({"arcsine", "normal", "none"}));
    hg->add_option("--fit-output", hg_fit_out, "fit-curve CSV path");
    hg->callback([&] {
        if (app.count("--truncation") == 0) common.truncation = "fixed:1000";
        rc = cmd_histogram(common, hg_beta, hg_dt, hg_samples, hg_dy, hg_fit, hg_fit_out);
    });

    // variance-scan
    std::vector<double> vs_betas;
    double vs_lo = 0.01, vs_hi = 10.0, vs_dt = 0.05;
    int vs_points = 20, vs_samples = 10000;
    std::string vs_fit_range = "0.01:0.1";
    auto* vs = app.add_subcommand("variance-scan",
                                  "sample variance against temperature, power-law fit");
    vs->add_option("--beta", vs_betas, "explicit beta grid")->delimiter(',');
    vs->add_option("--beta-min", vs_lo, "log-grid start")->check(CLI::PositiveNumber);
    vs->add_option("--beta-max", vs_hi, "log-grid end")->check(CLI::PositiveNumber);
    vs->add_option("--points", vs_points, "log-grid size")->check(CLI::Range(1, 100000));
    vs->add_option("--dt", vs_dt, "sampling interval")->check(CLI::PositiveNumber);
    vs->add_option("--samples", vs_samples, "samples per beta (N+1)")
        ->check(CLI::Range(2, 100000000));
    vs->add_option("--fit-range", vs_fit_range, "power-law fit range lo:hi ('' disables)");
    vs->callback([&] {
        if (app.count("--truncation") == 0) common.truncation = "fixed:1000";
        rc = cmd_variance_scan(common, vs_betas, vs_lo, vs_hi, vs_points, vs_dt, vs_samples,
                               vs_fit_range);
    });

    // entanglement
    std::vector<double> en_betas = {10.0, 2.0, 1.0};
    double en_tmax = kTwoPi;
    int en_points = 600;
    auto* en = app.add_subcommand("entanglement",
                                  "projected-subspace entanglement lower bound CSV");
    en->add_option("--beta", en_betas, "inverse temperatures")->delimiter(',');
    en->add_option("--t-max", en_tmax, "final time")->check(CLI::PositiveNumber);
    en->add_option("--points", en_points, "grid size")->check(CLI::Range(2, 10000000));
    en->callback([&] { rc = cmd_entanglement(common, en_betas, en_tmax, en_points); });

    // verify
    std::string vf_checks = "all";
    std::vector<double> vf_betas;
    int vf_fock = 0, vf_cases = 1000;
    unsigned int vf_seed = 20240717;
    auto* vf = app.add_subcommand("verify", "oracle-equivalence and invariant self-checks");
    vf->add_option("--checks", vf_checks, "subset: all, oracle or invariants")
        ->check(CLI::IsMember({"all", "oracle", "invariants"}));
    vf->add_option("--beta", vf_betas, "temperatures for the oracle checks")->delimiter(',');
    vf->add_option("--fock-dim", vf_fock, "oracle Fock dimension (0 = from thermal tail)");
    vf->add_option("--seed", vf_seed, "random-case seed");
    vf->add_option("--cases", vf_cases, "random-case count")->check(CLI::Range(1, 10000000));
    vf->callback([&] { rc = cmd_verify(vf_checks, vf_betas, vf_fock, vf_seed, vf_cases); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
