#include <cnls/verify.hpp>

#include <cnls/solve.hpp>
#include <cnls/specfun.hpp>
#include <cnls/stability.hpp>
#include <cnls/waves.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <vector>

namespace cnls {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (n - 1));
    return g;
}

// Frequency grid strictly inside the regime's interval.
std::vector<double> frequency_grid(const ModelParams& p, int n) {
    const double omt = 4.0 * std::exp(-2.0 * euler_gamma);
    return p.regime == Regime::Focusing ? log_grid(omt * 1.03, 60.0, n)
                                        : log_grid(0.01, omt * 0.97, n);
}

void check(std::vector<CheckResult>& out, const std::string& name,
           const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [pass, detail] = body();
        out.push_back({name, pass, detail});
    } catch (const std::exception& e) {
        out.push_back({name, false, std::string("exception: ") + e.what()});
    }
}

}  // namespace

std::vector<CheckResult> run_verification_suite(const ModelParams& p) {
    std::vector<CheckResult> out;
    const bool focusing = p.regime == Regime::Focusing;
    const CriticalConstants cc = critical_constants(p);

    // -- special functions -------------------------------------------------
    check(out, "k0-decreasing-log-convex", [] {
        double worst = 0.0;
        const int n = 300;
        std::vector<double> lk(n);
        for (int i = 0; i < n; ++i)
            lk[i] = std::log(macdonald_k0(0.01 + (20.0 - 0.01) * i / (n - 1)));
        bool ok = true;
        for (int i = 1; i < n; ++i)
            ok = ok && lk[i] < lk[i - 1];
        for (int i = 1; i + 1 < n; ++i) {
            const double second = lk[i - 1] + lk[i + 1] - 2.0 * lk[i];
            worst = std::min(worst, second);
            ok = ok && second > -1e-12;
        }
        return std::make_pair(ok, fmt("min discrete second difference of log K0: %.3g", worst));
    });

    check(out, "k0-branch-crossover", [] {
        double worst = 0.0;
        for (double x = 1.6; x <= 2.4; x += 0.05) {
            const double a = macdonald_k0_series(x);
            const double b = macdonald_k0_asymptotic(x);
            worst = std::max(worst, std::abs(a - b) / std::abs(a));
        }
        return std::make_pair(worst <= 1e-9, fmt("max relative branch gap %.3g", worst));
    });

    check(out, "quadrature-resolvent-norms", [] {
        double worst = 0.0;
        for (double lambda : {0.5, 1.0, 3.0}) {
            auto f = [lambda](double k) { return 1.0 / ((k * k + lambda) * (k * k + lambda)); };
            const QuadratureResult q = radial_fourier_quadrature(f, -4.0);
            worst = std::max(worst, std::abs(q.value - 1.0 / (2.0 * lambda)));
        }
        return std::make_pair(worst <= 1e-9, fmt("max abs defect %.3g", worst));
    });

    // -- critical constants ------------------------------------------------
    check(out, "omega-bar-ratio", [] {
        double worst = 0.0;
        for (double s : {0.5, 1.0, 2.0, 3.0}) {
            const CriticalConstants c = critical_constants(make_params(s, -1.0));
            worst = std::max(worst, std::abs(*c.omega_bar / c.omega_tilde - std::exp(1.0 / s)));
        }
        return std::make_pair(worst <= 1e-12, fmt("max |omega_bar/omega_tilde - e^{1/s}| %.3g", worst));
    });

    if (focusing) {
        check(out, "constants-cross-checks", [&] {
            const double e_qbar = energy_of_charge(p, *cc.q_bar);
            const double m_obar = mass_of_frequency(p, *cc.omega_bar);
            const double q_obar = charge_of_frequency(p, *cc.omega_bar);
            const double r1 = std::abs(e_qbar - *cc.lambda_threshold) / std::abs(*cc.lambda_threshold);
            const double r2 = std::abs(m_obar - *cc.mu_bar) / *cc.mu_bar;
            const double r3 = std::abs(q_obar - *cc.q_bar) / *cc.q_bar;
            const double worst = std::max({r1, r2, r3});
            return std::make_pair(worst <= 1e-12,
                                  fmt("max relative defect of E(q_bar)=Lambda, M(omega_bar)=mu_bar, "
                                      "q(omega_bar)=q_bar: %.3g",
                                      worst));
        });
    }

    // -- standing-wave maps --------------------------------------------------
    check(out, "frequency-charge-round-trips", [&] {
        double worst = 0.0;
        for (double omega : frequency_grid(p, 100))
            worst = std::max(worst,
                             std::abs(frequency_of_charge(p, charge_of_frequency(p, omega)) - omega) / omega);
        for (double q : log_grid(0.02, focusing ? 1.5 : 0.9, 100))
            worst = std::max(worst,
                             std::abs(charge_of_frequency(p, frequency_of_charge(p, q)) - q) / q);
        return std::make_pair(worst <= 1e-12, fmt("max relative round-trip defect %.3g", worst));
    });

    check(out, "parametrization-consistency", [&] {
        double worst = 0.0;
        for (double omega : frequency_grid(p, 50)) {
            const double q = charge_of_frequency(p, omega);
            const double de = std::abs(energy_of_charge(p, q) - energy_of_frequency(p, omega));
            const double dm = std::abs(mass_of_charge(p, q) - mass_of_frequency(p, omega));
            worst = std::max(worst, de / std::max(1e-30, std::abs(energy_of_frequency(p, omega))));
            worst = std::max(worst, dm / mass_of_frequency(p, omega));
        }
        return std::make_pair(worst <= 1e-12, fmt("max relative defect %.3g", worst));
    });

    if (focusing) {
        check(out, "mass-slope-dichotomy", [&] {
            int bad = 0;
            for (double omega : log_grid(cc.omega_tilde * 1.001, *cc.omega_bar * 0.999, 50))
                if (!(mass_slope_indicator(p, omega) > 0.0))
                    ++bad;
            for (double omega : log_grid(*cc.omega_bar * 1.001, 1e4, 50))
                if (!(mass_slope_indicator(p, omega) < 0.0))
                    ++bad;
            return std::make_pair(bad == 0, fmt("%g sign violations over 100 frequencies", bad));
        });

        check(out, "energy-minimum-at-omega-bar", [&] {
            const auto grid = log_grid(cc.omega_tilde * 1.0001, 50.0, 4000);
            double best = 0.0, best_omega = 0.0;
            for (double omega : grid) {
                const double e = energy_of_frequency(p, omega);
                if (e < best) {
                    best = e;
                    best_omega = omega;
                }
            }
            const bool ok = std::abs(best_omega - *cc.omega_bar) / *cc.omega_bar < 2e-3 &&
                            std::abs(best - *cc.lambda_threshold) < 1e-6 * std::abs(*cc.lambda_threshold) + 1e-9;
            return std::make_pair(ok, fmt("grid minimum at omega=%.6g, value %.6g", best_omega, best));
        });
    } else {
        check(out, "defocusing-mass-monotone", [&] {
            const auto grid = frequency_grid(p, 100);
            int bad = 0;
            for (std::size_t i = 1; i < grid.size(); ++i)
                if (!(mass_of_frequency(p, grid[i]) < mass_of_frequency(p, grid[i - 1])))
                    ++bad;
            // range check: M spans many orders of magnitude over the
            // numerically reachable interval
            const double m_hi = mass_of_frequency(p, 1e-12);
            const double m_lo = mass_of_frequency(p, cc.omega_tilde * (1.0 - 1e-9));
            const bool span = m_hi > 1e6 && m_lo < 1e-6;
            return std::make_pair(bad == 0 && span,
                                  fmt("violations %g; range [%.3g, ...]", double(bad), m_lo));
        });

        check(out, "defocusing-energy-unbounded-below", [&] {
            return std::make_pair(energy_of_frequency(p, 1e-40) < -10.0,
                                  fmt("E(1e-40) = %.6g", energy_of_frequency(p, 1e-40)));
        });
    }

    check(out, "pairing-vs-quadrature", [] {
        double worst = 0.0;
        for (double l1 : {0.5, 1.0, 2.0, 10.0})
            for (double l2 : {0.5, 1.0, 2.0, 10.0}) {
                auto f = [=](double k) { return 1.0 / ((k * k + l1) * (k * k + l2)); };
                const double quad = radial_fourier_quadrature(f, -4.0).value / (2.0 * pi);
                worst = std::max(worst, std::abs(quad - green_l2_pairing(l1, l2).l2_inner));
            }
        return std::make_pair(worst <= 1e-8, fmt("max abs defect %.3g over 16 pairs", worst));
    });

    // -- linearization spectrum ----------------------------------------------
    check(out, "alpha-coupling-ratio", [&] {
        double worst = 0.0;
        for (double omega : frequency_grid(p, 50)) {
            const SpectrumReport r = linearization_spectrum(p, omega);
            worst = std::max(worst, std::abs(r.alpha1 / r.alpha2 - (2.0 * p.sigma + 1.0)));
        }
        return std::make_pair(worst == 0.0, fmt("max |alpha1/alpha2 - (2s+1)| %.3g", worst));
    });

    check(out, "bound-state-consistency", [&] {
        double worst = 0.0;
        for (double omega : frequency_grid(p, 50)) {
            const SpectrumReport r = linearization_spectrum(p, omega);
            worst = std::max(worst,
                             std::abs(point_interaction_eigenvalue(r.alpha2) + omega) / omega);
        }
        return std::make_pair(worst <= 1e-12, fmt("max relative defect %.3g", worst));
    });

    if (focusing) {
        check(out, "stability-verdict-equivalence", [&] {
            int bad = 0;
            for (double omega : frequency_grid(p, 100)) {
                if (omega == *cc.omega_bar)
                    continue;
                const bool stable = classify_stability(p, omega) == StabilityVerdict::Stable;
                const bool by_freq = omega < *cc.omega_bar;
                const bool by_slope = mass_slope_indicator(p, omega) > 0.0;
                if (stable != by_freq || stable != by_slope)
                    ++bad;
            }
            return std::make_pair(bad == 0, fmt("%g disagreements over 100 frequencies", double(bad)));
        });
    } else {
        check(out, "defocusing-all-stable-no-negative-eigenvalue", [&] {
            int bad = 0;
            for (double omega : frequency_grid(p, 100)) {
                const SpectrumReport r = linearization_spectrum(p, omega);
                if (r.negative_eigenvalue || !(r.isolated_point > 0.0) ||
                    classify_stability(p, omega) != StabilityVerdict::Stable)
                    ++bad;
            }
            return std::make_pair(bad == 0, fmt("%g violations over 100 frequencies", double(bad)));
        });
    }

    // -- solvers ---------------------------------------------------------------
    if (focusing) {
        check(out, "mass-inversion-residuals", [&] {
            double worst = 0.0;
            bool straddle = true;
            for (double f : {0.05, 0.3, 0.6, 0.95}) {
                const MassInversionResult r = invert_mass_focusing(p, f * *cc.mu_bar);
                worst = std::max({worst, r.residual_low, r.residual_high});
                straddle = straddle && r.omega_low < *cc.omega_bar && r.omega_high > *cc.omega_bar;
            }
            return std::make_pair(worst <= 1e-10 && straddle,
                                  fmt("max relative residual %.3g", worst));
        });

        check(out, "escape-sequence-decreasing", [&] {
            bool decreasing = true;
            double prev = escape_sequence_energy(p, 1.0, 1);
            for (int k = 1; k <= 12; ++k) {
                const double e = escape_sequence_energy(p, 1.0, 1L << k);
                decreasing = decreasing && e < prev;
                prev = e;
            }
            return std::make_pair(decreasing, fmt("E at n=4096: %.6g", prev));
        });
    } else {
        check(out, "ground-state-residuals-and-monotonicity", [&] {
            double worst_res = 0.0, worst_mass = 0.0;
            double prev_omega = cc.omega_tilde;
            bool monotone = true;
            for (double mu : {1e-3, 1e-2, 0.1, 1.0, 10.0}) {
                const GroundStateResult r = ground_state_frequency(p, mu);
                worst_res = std::max(worst_res, r.residual);
                worst_mass = std::max(worst_mass, std::abs(mass_of_frequency(p, r.omega_mu) - mu) / mu);
                monotone = monotone && r.omega_mu < prev_omega;
                prev_omega = r.omega_mu;
            }
            return std::make_pair(worst_res <= 1e-12 && worst_mass <= 1e-10 && monotone,
                                  fmt("max residual %.3g, max mass defect %.3g", worst_res, worst_mass));
        });
    }

    return out;
}

}  // namespace cnls
