#include <cnls/solve.hpp>

#include <cnls/specfun.hpp>
#include <cnls/waves.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cnls {

namespace {

constexpr double pi = std::numbers::pi;

// Bracketing bisection with secant refinement, derivative-free. The bracket
// is maintained at every step; a bisection is forced whenever two successive
// secant steps fail to halve the interval, so worst-case convergence matches
// plain bisection. Runs the interval down to a few ulps, which the callers'
// residual contracts require at small roots.
template <class F>
double solve_bracketed(F&& f, double a, double b, double fa, double fb) {
    if (std::isnan(fa) || std::isnan(fb) || (fa < 0.0) == (fb < 0.0))
        throw bracket_error("root solve: endpoints do not straddle a root");
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;

    double width_at_last_check = b - a;
    for (int it = 0; it < 400; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b)
            break;  // interval width reached machine precision

        bool force_bisect = false;
        if (it % 2 == 0)
            width_at_last_check = b - a;
        else if (b - a > 0.5 * width_at_last_check)
            force_bisect = true;  // secant has stalled

        double c = mid;
        if (!force_bisect && fb != fa) {
            const double s = b - fb * (b - a) / (fb - fa);
            if (s > a && s < b)
                c = s;
        }

        const double fc = f(c);
        if (fc == 0.0)
            return c;
        if ((fc < 0.0) == (fa < 0.0)) {
            a = c;
            fa = fc;
        } else {
            b = c;
            fb = fc;
        }
    }
    return std::abs(fa) < std::abs(fb) ? a : b;
}

double omega_tilde_value() {
    return 4.0 * std::exp(-2.0 * euler_gamma);
}

}  // namespace

GroundStateResult ground_state_frequency(const ModelParams& p, double mu) {
    if (p.regime != Regime::Defocusing)
        throw std::domain_error("ground_state_frequency: requires the defocusing regime");
    if (!(mu > 0.0))
        throw std::domain_error("ground_state_frequency: mass must be positive");

    // g(omega) = log(2/sqrt(omega)) - gamma - 2 pi beta (4 pi omega mu)^sigma,
    // strictly decreasing on (0, omega_tilde) from +inf to a negative value.
    auto g = [&](double omega) {
        return std::numbers::ln2 - 0.5 * std::log(omega) - euler_gamma -
               2.0 * pi * p.beta * std::pow(4.0 * pi * omega * mu, p.sigma);
    };

    const double omt = omega_tilde_value();
    double b = omt * (1.0 - 1e-14);
    double gb = g(b);
    if (!(gb < 0.0))
        throw bracket_error("ground_state_frequency: right endpoint fails to bracket");
    double a = 0.5 * omt;
    double ga = g(a);
    while (!(ga > 0.0)) {
        a *= 0.25;
        if (a < std::numeric_limits<double>::min())
            throw bracket_error("ground_state_frequency: bracket underflow at extreme mass");
        ga = g(a);
    }

    GroundStateResult r;
    r.mu = mu;
    r.omega_mu = solve_bracketed(g, a, b, ga, gb);
    r.residual = std::abs(g(r.omega_mu));
    r.charge = charge_of_frequency(p, r.omega_mu);
    r.energy = energy_of_frequency(p, r.omega_mu);
    return r;
}

MassInversionResult invert_mass_focusing(const ModelParams& p, double mu) {
    if (p.regime != Regime::Focusing)
        throw std::domain_error("invert_mass_focusing: requires the focusing regime");
    if (!(mu > 0.0))
        throw std::domain_error("invert_mass_focusing: mass must be positive");

    const CriticalConstants cc = critical_constants(p);
    const double mu_bar = *cc.mu_bar;
    const double omega_bar = *cc.omega_bar;
    if (mu == mu_bar)
        throw std::domain_error(
            "invert_mass_focusing: degenerate double root at omega_bar; the unique "
            "maximal-mass wave sits at the critical frequency");
    if (mu > mu_bar)
        throw std::domain_error("invert_mass_focusing: no standing wave has mass above mu_bar");

    auto g = [&](double omega) { return mass_of_frequency(p, omega) - mu; };

    // Low branch: M grows from 0 to mu_bar on (omega_tilde, omega_bar).
    const double omt = omega_tilde_value();
    double a = omt * (1.0 + 1e-8);
    while (!(g(a) < 0.0)) {
        a = omt + 0.0625 * (a - omt);
        if (a - omt < omt * 1e-15)
            throw bracket_error("invert_mass_focusing: low bracket collapsed at omega_tilde");
    }
    const double omega_low = solve_bracketed(g, a, omega_bar, g(a), mu_bar - mu);

    // High branch: M decays to 0 on (omega_bar, inf); double the endpoint
    // until it drops below mu.
    double b = 2.0 * omega_bar;
    while (!(g(b) < 0.0)) {
        b *= 2.0;
        if (b > 1e300)
            throw bracket_error("invert_mass_focusing: high bracket overflow");
    }
    const double omega_high = solve_bracketed(g, omega_bar, b, mu_bar - mu, g(b));

    MassInversionResult r;
    r.mu = mu;
    r.omega_low = omega_low;
    r.omega_high = omega_high;
    r.residual_low = std::abs(mass_of_frequency(p, omega_low) - mu) / mu;
    r.residual_high = std::abs(mass_of_frequency(p, omega_high) - mu) / mu;
    return r;
}

namespace detail {

double escape_sequence_energy_real(const ModelParams& p, double mu, double n) {
    return -std::sqrt(n) * mu +
           (p.beta * std::pow(4.0 * pi * mu * n, p.sigma) / (p.sigma + 1.0) +
            (std::log(0.5 * std::sqrt(n)) + euler_gamma) / (2.0 * pi)) *
               std::sqrt(pi * mu * n);
}

}  // namespace detail

double escape_sequence_energy(const ModelParams& p, double mu, long n) {
    if (p.regime != Regime::Focusing)
        throw std::domain_error("escape_sequence_energy: requires the focusing regime");
    if (!(mu > 0.0))
        throw std::domain_error("escape_sequence_energy: mass must be positive");
    if (n < 1)
        throw std::domain_error("escape_sequence_energy: index must be a positive integer");
    return detail::escape_sequence_energy_real(p, mu, static_cast<double>(n));
}

double defocusing_lower_bound_gap(const ModelParams& p, double mu, double q) {
    if (p.regime != Regime::Defocusing)
        throw std::domain_error("defocusing_lower_bound_gap: requires the defocusing regime");
    if (!(mu > 0.0))
        throw std::domain_error("defocusing_lower_bound_gap: mass must be positive");
    if (!(q > 0.0))
        throw std::domain_error("defocusing_lower_bound_gap: charge must be positive");

    const GroundStateResult gs = ground_state_frequency(p, mu);
    const double l = 0.5 * std::log(gs.omega_mu) - std::numbers::ln2 + euler_gamma;
    auto f = [&](double s) {
        return -gs.omega_mu * mu +
               (p.beta * std::pow(s, 2.0 * p.sigma) / (p.sigma + 1.0) + l / (2.0 * pi)) * s * s;
    };
    return f(q) - f(gs.charge);
}

}  // namespace cnls
