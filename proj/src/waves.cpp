#include <cnls/waves.hpp>

#include <cnls/specfun.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cnls {

namespace {

constexpr double pi = std::numbers::pi;

// Everything below is written in terms of ell(omega) = log(sqrt(omega)/2) +
// gamma, which is positive on the focusing interval, negative on the
// defocusing one, and zero exactly at omega_tilde.
double ell(double omega) {
    return 0.5 * std::log(omega) - std::numbers::ln2 + euler_gamma;
}

// Validates omega against the regime's open interval and returns ell(omega).
double checked_ell(const ModelParams& p, double omega) {
    if (!(omega > 0.0))
        throw std::domain_error("frequency must be positive");
    const double l = ell(omega);
    if (p.regime == Regime::Focusing ? !(l > 0.0) : !(l < 0.0))
        throw std::domain_error("frequency outside the regime's admissible interval");
    return l;
}

void check_charge(double q) {
    if (!(q > 0.0))
        throw std::domain_error("charge must be positive");
}

}  // namespace

double charge_of_frequency(const ModelParams& p, double omega) {
    const double l = checked_ell(p, omega);
    return std::pow(-l / (2.0 * pi * p.beta), 1.0 / (2.0 * p.sigma));
}

double frequency_of_charge(const ModelParams& p, double q) {
    check_charge(q);
    return 4.0 * std::exp(-2.0 * euler_gamma - 4.0 * pi * p.beta * std::pow(q, 2.0 * p.sigma));
}

double energy_of_charge(const ModelParams& p, double q) {
    check_charge(q);
    return -q * q / (4.0 * pi) -
           p.sigma * p.beta * std::pow(q, 2.0 * p.sigma + 2.0) / (p.sigma + 1.0);
}

double energy_of_frequency(const ModelParams& p, double omega) {
    const double l = checked_ell(p, omega);
    const double q2 = std::pow(-l / (2.0 * pi * p.beta), 1.0 / p.sigma);
    return q2 * (p.sigma * l / (2.0 * pi * (p.sigma + 1.0)) - 1.0 / (4.0 * pi));
}

double mass_of_frequency(const ModelParams& p, double omega) {
    const double l = checked_ell(p, omega);
    const double q2 = std::pow(-l / (2.0 * pi * p.beta), 1.0 / p.sigma);
    return q2 / (4.0 * pi * omega);
}

double mass_of_charge(const ModelParams& p, double q) {
    check_charge(q);
    return q * q *
           std::exp(2.0 * euler_gamma + 4.0 * pi * p.beta * std::pow(q, 2.0 * p.sigma)) /
           (16.0 * pi);
}

double mass_slope_indicator(const ModelParams& p, double omega) {
    const double l = checked_ell(p, omega);
    return 1.0 / (2.0 * p.sigma * l) - 1.0;
}

StandingWave standing_wave(const ModelParams& p, double omega) {
    StandingWave w;
    w.omega = omega;
    w.q = charge_of_frequency(p, omega);
    w.mass = w.q * w.q / (4.0 * pi * omega);
    w.energy = energy_of_frequency(p, omega);
    if (p.regime == Regime::Defocusing) {
        w.branch = Branch::Defocusing;
    } else {
        const double omega_bar = 4.0 * std::exp(-2.0 * euler_gamma + 1.0 / p.sigma);
        w.branch = omega < omega_bar ? Branch::FocusingStable : Branch::FocusingUnstable;
    }
    return w;
}

GreenPairing green_l2_pairing(double lambda1, double lambda2) {
    if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
        throw std::domain_error("green_l2_pairing: spectral parameters must be positive");
    double inner;
    if (lambda1 == lambda2) {
        inner = 1.0 / (4.0 * pi * lambda1);
    } else {
        // log1p keeps the removable singularity on the diagonal benign.
        const double d = lambda2 - lambda1;
        inner = std::log1p(d / lambda1) / (4.0 * pi * d);
    }
    return GreenPairing{lambda1, lambda2, inner};
}

double vnorm_distance(const ModelParams& p, const StandingWave& w1, const StandingWave& w2,
                      double lambda_ref) {
    (void)p;
    if (!(lambda_ref > 0.0))
        throw std::domain_error("vnorm_distance: lambda_ref must be positive");
    if (w1.omega == w2.omega && w1.q == w2.q)
        return 0.0;

    // Regular part of u_1 - u_2 against G_{lambda_ref}, in Fourier variables:
    //   R(k) = (1/2pi) [ q1 (lr - w1) / ((k^2+w1)(k^2+lr))
    //                  - q2 (lr - w2) / ((k^2+w2)(k^2+lr)) ],
    // and ||regular||^2_{H^1} = 2 pi * int (1 + k^2) R(k)^2 k dk.
    const double lr = lambda_ref;
    const double a1 = w1.q * (lr - w1.omega);
    const double a2 = w2.q * (lr - w2.omega);
    const double o1 = w1.omega, o2 = w2.omega;
    auto integrand = [=](double k) {
        const double k2 = k * k;
        const double d = a1 / ((k2 + o1) * (k2 + lr)) - a2 / ((k2 + o2) * (k2 + lr));
        return (1.0 + k2) * d * d / (2.0 * pi);
    };
    const QuadratureResult h1 = radial_fourier_quadrature(integrand, -6.0, 1e-12);

    const double dq = w1.q - w2.q;
    return std::sqrt(h1.value + dq * dq / (4.0 * pi * lr));
}

}  // namespace cnls
