#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "jcm/model.hpp"

using namespace jcm;

namespace {

// Independent brute-force cutoff: walk N upward until the tail bound drops
// below eps.
int brute_force_order(double b, double eps) {
    int n = 1;
    while (std::exp(-b * n) / (1.0 - std::exp(-b)) >= eps) ++n;
    return n;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("dtilde direct values") {
    ModelParams p = ModelParams::resonant(1.0);
    CHECK(dtilde(0, p) == 0.0);
    CHECK(dtilde(1, p) == 1.0);

    ModelParams det = p;
    det.omega = 2.0;  // delta_omega = 1
    CHECK(det.delta_omega() == 1.0);
    CHECK(dtilde(2, det) == doctest::Approx(2.25).epsilon(1e-15));
    CHECK_THROWS_AS(dtilde(-1, p), std::invalid_argument);
}

TEST_CASE("truncation order: fixed passthrough and adaptive bound") {
    CHECK(truncation_order(0.5, TruncationPolicy::fixed(500)) == 500);

    const TruncationPolicy adaptive = TruncationPolicy::adaptive(1e-12);
    for (double b : {1.0, 0.01, 0.5, 10.0, 50.0})
        CHECK(truncation_order(b, adaptive) == brute_force_order(b, 1e-12));
    CHECK(truncation_order(1.0, adaptive) == 29);
    // the small-beta order lands by the closed-form bound near 3224
    const int n_small = truncation_order(0.01, adaptive);
    CHECK(n_small == brute_force_order(0.01, 1e-12));
    CHECK(std::abs(n_small - 3224) <= 2);
}

TEST_CASE("adaptive truncation rejects infinite temperature") {
    CHECK_THROWS_WITH_AS(truncation_order(0.0, TruncationPolicy::adaptive(1e-12)),
                         "adaptive truncation undefined at infinite temperature",
                         std::domain_error);
}

TEST_CASE("policy construction validates its arguments") {
    CHECK_THROWS_AS(TruncationPolicy::fixed(0), std::invalid_argument);
    CHECK_THROWS_AS(TruncationPolicy::adaptive(0.0), std::invalid_argument);
    CHECK_THROWS_AS(TruncationPolicy::adaptive(1.0), std::invalid_argument);
}

TEST_CASE("params validation and derived detuning") {
    ModelParams p;
    p.beta = -0.1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.beta = 1.0;
    p.g = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.g = 0.7;
    p.omega = 2.5;
    p.omega0 = 1.0;
    CHECK(p.delta_omega() == 1.5);
    CHECK(p.thermal_exponent() == 2.5);
    CHECK(p.reduced_time(2.0) == doctest::Approx(1.4));
}

TEST_CASE("evolve_bloch applies the affine map") {
    const EvolutionMatrix ident{};
    const BlochVector s{0.3, -0.2, 0.6};
    const BlochVector r = evolve_bloch(s, ident);
    CHECK(r.sx == s.sx);
    CHECK(r.sy == s.sy);
    CHECK(r.sz == s.sz);

    const EvolutionMatrix m{0.5, 0.25, -0.5, 0.1};
    const BlochVector q = evolve_bloch({1.0, 2.0, 3.0}, m);
    CHECK(q.sx == doctest::Approx(0.5 * 1.0 + 0.25 * 2.0));
    CHECK(q.sy == doctest::Approx(-0.25 * 1.0 + 0.5 * 2.0));
    CHECK(q.sz == doctest::Approx(-0.5 * 3.0 + 0.1));

    // pure offset map: image of the origin is the offset column
    const BlochVector off = evolve_bloch({0, 0, 0}, {0.7, 0.0, 0.4, -0.3});
    CHECK(off.sx == 0.0);
    CHECK(off.sy == 0.0);
    CHECK(off.sz == doctest::Approx(-0.3));
}

}  // TEST_SUITE
