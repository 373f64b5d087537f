#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "jcm/series.hpp"

using namespace jcm;

namespace {

std::vector<double> uniform_grid(double t_max, double dt) {
    const int n = static_cast<int>(std::llround(t_max / dt));
    std::vector<double> g(n + 1);
    for (int i = 0; i <= n; ++i) g[i] = dt * i;
    return g;
}

// 2D segment intersection, proper crossings only.
bool segments_cross(double ax, double ay, double bx, double by, double cx, double cy,
                    double dx, double dy) {
    const double d1x = bx - ax, d1y = by - ay;
    const double d2x = dx - cx, d2y = dy - cy;
    const double denom = d1x * d2y - d1y * d2x;
    if (std::abs(denom) < 1e-30) return false;
    const double ex = cx - ax, ey = cy - ay;
    const double s = (ex * d2y - ey * d2x) / denom;
    const double u = (ex * d1y - ey * d1x) / denom;
    return s > 1e-9 && s < 1.0 - 1e-9 && u > 1e-9 && u < 1.0 - 1e-9;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("identity map at t = 0 up to the truncation tail") {
    for (double beta : {0.05, 0.5, 1.0, 5.0, 30.0}) {
        const EvolutionMatrix m = evolution_matrix_resonant(0.0, beta);
        CHECK(m.l1 == doctest::Approx(1.0).epsilon(2e-12));
        CHECK(m.l2 == 0.0);
        CHECK(m.l3 == doctest::Approx(1.0).epsilon(2e-12));
        CHECK(std::abs(m.l4) < 2e-12);
    }
    ModelParams det = ModelParams::resonant(0.8);
    det.omega = 2.0;
    const EvolutionMatrix g = evolution_matrix_general(0.0, det);
    CHECK(g.l1 == doctest::Approx(1.0).epsilon(2e-12));
    CHECK(std::abs(g.l2) < 2e-12);
    CHECK(g.l3 == doctest::Approx(1.0).epsilon(2e-12));
    CHECK(std::abs(g.l4) < 2e-12);
}

TEST_CASE("low-temperature limit reduces to the vacuum Rabi forms") {
    // only the lowest photon sector survives at beta = 50
    for (double t : {0.3, 1.0, 2.7}) {
        const EvolutionMatrix m = evolution_matrix_resonant(t, 50.0);
        CHECK(m.l1 == doctest::Approx(std::cos(t)).epsilon(1e-12));
        CHECK(m.l3 == doctest::Approx(std::cos(t) * std::cos(t)).epsilon(1e-12));
        CHECK(m.l4 == doctest::Approx(-0.5 * (1.0 - std::cos(2.0 * t))).epsilon(1e-12));
        // S(0) = (0,0,1) swings as cos(2t): the vacuum Rabi oscillation
        const BlochVector s = evolve_bloch({0, 0, 1}, m);
        CHECK(s.sz == doctest::Approx(std::cos(2.0 * t)).epsilon(1e-12));
    }
}

TEST_CASE("transverse coefficient vanishes identically on resonance") {
    for (double t : {0.0, 0.4, 2.0, 17.3})
        CHECK(evolution_matrix_resonant(t, 0.7).l2 == 0.0);
}

TEST_CASE("detuned series specializes to the resonant one") {
    for (double beta : {0.5, 1.0, 2.0}) {
        const ModelParams p = ModelParams::resonant(beta);
        GeneralEvaluator gen(p);
        ResonantEvaluator res(beta, p.truncation);
        for (double t : {0.3, 1.0, 5.0}) {
            const EvolutionMatrix a = gen.at(t);
            const EvolutionMatrix b = res.at(t);
            CHECK(std::abs(a.l1 - b.l1) < 1e-12);
            CHECK(std::abs(a.l2) < 1e-12);
            CHECK(std::abs(a.l3 - b.l3) < 1e-12);
            CHECK(std::abs(a.l4 - b.l4) < 1e-12);
        }
    }
}

TEST_CASE("unit conversion: scaled coupling matches reduced time") {
    ModelParams p = ModelParams::resonant(1.5);
    p.g = 2.0;  // natural time t maps to reduced time 2t
    const EvolutionMatrix scaled = evolution_matrix(0.7, p);
    const EvolutionMatrix reduced = evolution_matrix_resonant(1.4, 1.5);
    CHECK(scaled.l1 == doctest::Approx(reduced.l1).epsilon(1e-14));
    CHECK(scaled.l4 == doctest::Approx(reduced.l4).epsilon(1e-14));
}

TEST_CASE("resonant bounds: -1 <= L4 <= 0 and |L1|, |L3| <= 1") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ut(0.0, 25.0), ub(0.05, 15.0);
    for (int k = 0; k < 300; ++k) {
        const EvolutionMatrix m = evolution_matrix_resonant(ut(rng), ub(rng));
        CHECK(m.l4 <= 1e-9);
        CHECK(m.l4 >= -1.0 - 1e-9);
        CHECK(std::abs(m.l1) <= 1.0 + 1e-9);
        CHECK(std::abs(m.l3) <= 1.0 + 1e-9);
    }
}

TEST_CASE("ball preservation under the evolution map") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0), ut(0.0, 20.0), ub(0.05, 20.0);
    for (int k = 0; k < 1000; ++k) {
        BlochVector s0{u(rng), u(rng), u(rng)};
        const double n = s0.norm();
        if (n > 1.0) {
            s0.sx /= n;
            s0.sy /= n;
            s0.sz /= n;
        }
        const BlochVector s = evolve_bloch(s0, evolution_matrix_resonant(ut(rng), ub(rng)));
        CHECK(s.norm() <= 1.0 + 1e-9);
    }
}

TEST_CASE("doubling a fixed cutoff moves the sums less than the tail bound") {
    for (int n : {10, 20, 40}) {
        const double beta = 0.5, t = 3.1;
        const EvolutionMatrix a = evolution_matrix_resonant(t, beta, TruncationPolicy::fixed(n));
        const EvolutionMatrix b =
            evolution_matrix_resonant(t, beta, TruncationPolicy::fixed(2 * n));
        const double bound = std::exp(-beta * n) / (1.0 - std::exp(-beta));
        CHECK(std::abs(a.l1 - b.l1) < bound);
        CHECK(std::abs(a.l3 - b.l3) < bound);
        CHECK(std::abs(a.l4 - b.l4) < bound);
    }
}

TEST_CASE("infinite temperature: fixed mode gives the zero map, adaptive rejects") {
    const EvolutionMatrix m =
        evolution_matrix_resonant(2.0, 0.0, TruncationPolicy::fixed(100));
    CHECK(m.l1 == 0.0);
    CHECK(m.l3 == 0.0);
    CHECK(m.l4 == 0.0);
    CHECK_THROWS_AS(evolution_matrix_resonant(2.0, 0.0), std::domain_error);
}

TEST_CASE("map family is not a semigroup") {
    // compose the t=1 map with itself and compare against the t=2 map
    const EvolutionMatrix a = evolution_matrix_resonant(1.0, 0.5);
    const EvolutionMatrix b = evolution_matrix_resonant(2.0, 0.5);
    const double comp_l1 = a.l1 * a.l1;
    const double comp_l3 = a.l3 * a.l3;
    const double comp_l4 = a.l3 * a.l4 + a.l4;
    const double dev = std::max({std::abs(b.l1 - comp_l1), std::abs(b.l3 - comp_l3),
                                 std::abs(b.l4 - comp_l4)});
    CHECK(dev > 0.01);
}

TEST_CASE("trajectory stays in the xz-plane for s0 = (1,0,0) on resonance") {
    const auto grid = uniform_grid(10.0, 0.1);
    const Trajectory traj = trajectory({1, 0, 0}, grid, ModelParams::resonant(0.5));
    REQUIRE(traj.points.size() == grid.size());
    for (const auto& pt : traj.points) CHECK(pt.sy == 0.0);
}

TEST_CASE("single-point grid returns the initial state") {
    const std::vector<double> grid{0.0};
    const Trajectory traj = trajectory({0.2, -0.1, 0.4}, grid, ModelParams::resonant(1.0));
    REQUIRE(traj.points.size() == 1);
    CHECK(traj.points[0].sx == doctest::Approx(0.2).epsilon(1e-11));
    CHECK(traj.points[0].sy == doctest::Approx(-0.1).epsilon(1e-11));
    CHECK(traj.points[0].sz == doctest::Approx(0.4).epsilon(2e-11));
}

TEST_CASE("trajectory rejects bad grids and unphysical states") {
    const ModelParams p = ModelParams::resonant(1.0);
    CHECK_THROWS_AS(trajectory({1, 0, 0}, std::vector<double>{0.0, 0.5, 0.5}, p),
                    std::invalid_argument);
    CHECK_THROWS_AS(trajectory({1, 0, 0}, std::vector<double>{1.0, 0.5}, p),
                    std::invalid_argument);
    CHECK_THROWS_AS(trajectory({1, 0, 0}, std::vector<double>{-1.0, 0.5}, p),
                    std::invalid_argument);
    CHECK_THROWS_AS(trajectory({1, 0, 0}, std::vector<double>{}, p), std::invalid_argument);
    CHECK_THROWS_AS(trajectory({2, 0, 0}, std::vector<double>{0.0, 1.0}, p),
                    std::invalid_argument);
}

TEST_CASE("short trajectory intersects itself without closing") {
    // beta = 0.5, t in [0, 6]: the planar curve crosses itself at least once,
    // and wherever it comes close to an earlier point it leaves in a clearly
    // different direction, so no closed loop forms.
    const auto grid = uniform_grid(6.0, 0.01);
    const Trajectory traj = trajectory({1, 0, 0}, grid, ModelParams::resonant(0.5));
    const auto& pts = traj.points;
    const std::size_t n = pts.size();

    int crossings = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 2; j + 1 < n; ++j)
            if (segments_cross(pts[i].sx, pts[i].sz, pts[i + 1].sx, pts[i + 1].sz,
                               pts[j].sx, pts[j].sz, pts[j + 1].sx, pts[j + 1].sz))
                ++crossings;
    CHECK(crossings >= 1);

    // revisit = returning near an earlier point after a genuine excursion;
    // nearby indices are the curve's own neighborhood, not a revisit
    for (double eps : {1e-6, 1e-3}) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 20; j + 1 < n; ++j) {
                const double dx = pts[j].sx - pts[i].sx;
                const double dz = pts[j].sz - pts[i].sz;
                if (std::sqrt(dx * dx + dz * dz) >= eps) continue;
                const double ax = pts[i + 1].sx - pts[i].sx, az = pts[i + 1].sz - pts[i].sz;
                const double bx = pts[j + 1].sx - pts[j].sx, bz = pts[j + 1].sz - pts[j].sz;
                const double la = std::hypot(ax, az), lb = std::hypot(bx, bz);
                if (la < 1e-4 || lb < 1e-4) continue;  // parked segments carry no direction
                const double cosang = (ax * bx + az * bz) / (la * lb);
                CHECK(cosang < 0.99);
            }
        }
    }
}

}  // TEST_SUITE
