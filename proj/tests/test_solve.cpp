#include <cnls/solve.hpp>

#include <cnls/specfun.hpp>
#include <cnls/stability.hpp>
#include <cnls/waves.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

using namespace cnls;

namespace {
constexpr double pi = std::numbers::pi;
const ModelParams foc = make_params(1.0, -1.0);
const ModelParams def = make_params(1.0, 1.0);
const CriticalConstants cfoc = critical_constants(foc);

// Independent residual of the ground-state equation.
double ground_state_defect(const ModelParams& p, double mu, double omega) {
    return std::log(2.0 / std::sqrt(omega)) - euler_gamma -
           2.0 * pi * p.beta * std::pow(4.0 * pi * omega * mu, p.sigma);
}
}  // namespace

TEST_CASE("ground_state_frequency solves the root equation") {
    const GroundStateResult r = ground_state_frequency(def, 0.01);
    // pinned from a 200-step bisection oracle at 50 digits
    CHECK(r.omega_mu == doctest::Approx(0.53863553849297671).epsilon(1e-12));
    CHECK(r.residual <= 1e-12);
    CHECK(r.charge == doctest::Approx(charge_of_frequency(def, r.omega_mu)).epsilon(1e-14));
    CHECK(r.energy == doctest::Approx(energy_of_frequency(def, r.omega_mu)).epsilon(1e-14));

    // agreement with an in-test bisection on the same interval
    const double ob = oracles::bisect([&](double w) { return ground_state_defect(def, 0.01, w); },
                                      1e-6, critical_constants(def).omega_tilde * (1.0 - 1e-12));
    CHECK(r.omega_mu == doctest::Approx(ob).epsilon(1e-13));

    CHECK_THROWS_AS(ground_state_frequency(foc, 0.01), std::domain_error);
    CHECK_THROWS_AS(ground_state_frequency(def, 0.0), std::domain_error);
}

TEST_CASE("ground state: mass round-trip and monotonicity in mu") {
    double prev_omega = 10.0;
    for (double mu : {1e-3, 1e-2, 0.1, 1.0, 10.0}) {
        const GroundStateResult r = ground_state_frequency(def, mu);
        CHECK(std::abs(mass_of_frequency(def, r.omega_mu) - mu) / mu <= 1e-10);
        CHECK(r.omega_mu < prev_omega);  // larger mass -> smaller frequency
        prev_omega = r.omega_mu;
    }
    // mu -> 0+ drives the frequency towards the endpoint
    CHECK(ground_state_frequency(def, 1e-12).omega_mu ==
          doctest::Approx(critical_constants(def).omega_tilde).epsilon(1e-6));
}

TEST_CASE("invert_mass_focusing finds both branches") {
    const MassInversionResult r = invert_mass_focusing(foc, 1e-3);
    // pinned from a 200-step per-branch bisection oracle at 50 digits
    CHECK(r.omega_low == doctest::Approx(1.6314985661089218).epsilon(1e-10));
    CHECK(r.omega_high == doctest::Approx(16.147408469944684).epsilon(1e-10));
    CHECK(r.residual_low <= 1e-10);
    CHECK(r.residual_high <= 1e-10);
    CHECK(r.omega_low < *cfoc.omega_bar);
    CHECK(r.omega_high > *cfoc.omega_bar);

    // in-test bisection oracle per branch
    auto g = [&](double w) { return mass_of_frequency(foc, w) - 1e-3; };
    const double lo = oracles::bisect(g, cfoc.omega_tilde * (1.0 + 1e-10), *cfoc.omega_bar);
    const double hi = oracles::bisect(g, *cfoc.omega_bar, 1e4);
    CHECK(r.omega_low == doctest::Approx(lo).epsilon(1e-12));
    CHECK(r.omega_high == doctest::Approx(hi).epsilon(1e-12));
}

TEST_CASE("invert_mass_focusing: stability tags and rejection above mu_bar") {
    for (double mu : {1e-4, 5e-4, 1e-3, 1.8e-3}) {
        const MassInversionResult r = invert_mass_focusing(foc, mu);
        CHECK(classify_stability(foc, r.omega_low) == StabilityVerdict::Stable);
        CHECK(classify_stability(foc, r.omega_high) == StabilityVerdict::Unstable);
        CHECK(std::abs(mass_of_frequency(foc, r.omega_low) -
                       mass_of_frequency(foc, r.omega_high)) <= 1e-10 * mu);
    }
    CHECK_THROWS_WITH_AS(invert_mass_focusing(foc, *cfoc.mu_bar),
                         doctest::Contains("degenerate double root"), std::domain_error);
    CHECK_THROWS_AS(invert_mass_focusing(foc, 2.0 * *cfoc.mu_bar), std::domain_error);
    CHECK_THROWS_AS(invert_mass_focusing(foc, -1e-3), std::domain_error);
    CHECK_THROWS_AS(invert_mass_focusing(def, 1e-3), std::domain_error);
}

TEST_CASE("escape sequence energies") {
    // pinned by direct substitution at 50 digits
    CHECK(escape_sequence_energy(foc, 1.0, 1) ==
          doctest::Approx(-12.169359670433106).epsilon(1e-13));
    CHECK(escape_sequence_energy(foc, 1.0, 4) ==
          doctest::Approx(-90.767588883709288).epsilon(1e-13));
    CHECK(escape_sequence_energy(foc, 1.0, 4) < escape_sequence_energy(foc, 1.0, 1));

    double prev = escape_sequence_energy(foc, 1.0, 1);
    for (int k = 1; k <= 12; ++k) {
        const double e = escape_sequence_energy(foc, 1.0, 1L << k);
        CHECK(e < prev);
        prev = e;
    }

    // fixed-mass identity through the pairing: 4 pi mu n <G_n, G_n> = mu
    for (long n : {1L, 4L, 16L}) {
        const double norm_sq = radial_fourier_quadrature(
                                   [n](double k) {
                                       return std::pow(k * k + static_cast<double>(n), -2.0);
                                   },
                                   -4.0, 1e-14)
                                   .value /
                               (2.0 * pi);
        CHECK(std::abs(4.0 * pi * 1.0 * static_cast<double>(n) * norm_sq - 1.0) <= 1e-10);
        CHECK(4.0 * pi * static_cast<double>(n) *
                  green_l2_pairing(static_cast<double>(n), static_cast<double>(n)).l2_inner ==
              doctest::Approx(1.0).epsilon(1e-14));
    }

    CHECK_THROWS_AS(escape_sequence_energy(foc, 1.0, 0), std::domain_error);
    CHECK_THROWS_AS(escape_sequence_energy(foc, -1.0, 1), std::domain_error);
    CHECK_THROWS_AS(escape_sequence_energy(def, 1.0, 1), std::domain_error);
}

TEST_CASE("defocusing lower-bound gap") {
    const GroundStateResult gs = ground_state_frequency(def, 0.01);
    CHECK(defocusing_lower_bound_gap(def, 0.01, gs.charge) == 0.0);
    CHECK(defocusing_lower_bound_gap(def, 0.01, 2.0 * gs.charge) > 0.0);

    // single interior minimum: scan q in (0, 5 q*]
    const auto grid = oracles::linear_grid(1e-4 * gs.charge, 5.0 * gs.charge, 2000);
    const auto m = oracles::grid_minimum(
        [&](double q) { return defocusing_lower_bound_gap(def, 0.01, q); }, grid);
    CHECK(std::abs(m.x - gs.charge) <= grid[1] - grid[0]);
    for (double q : grid)
        CHECK(defocusing_lower_bound_gap(def, 0.01, q) >= -1e-14);

    // f at its minimizer equals the standing-wave energy
    const double f_at_min = -gs.omega_mu * 0.01 +
                            (def.beta * std::pow(gs.charge, 2.0 * def.sigma) / (def.sigma + 1.0) +
                             (std::log(std::sqrt(gs.omega_mu) / 2.0) + euler_gamma) / (2.0 * pi)) *
                                gs.charge * gs.charge;
    CHECK(f_at_min == doctest::Approx(energy_of_charge(def, gs.charge)).epsilon(1e-12));

    CHECK_THROWS_AS(defocusing_lower_bound_gap(foc, 0.01, 0.1), std::domain_error);
    CHECK_THROWS_AS(defocusing_lower_bound_gap(def, 0.0, 0.1), std::domain_error);
    CHECK_THROWS_AS(defocusing_lower_bound_gap(def, 0.01, 0.0), std::domain_error);
}
