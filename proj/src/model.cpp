#include <cnls/model.hpp>

#include <cnls/specfun.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cnls {

ModelParams make_params(double sigma, double beta) {
    if (!(sigma > 0.0))
        throw std::domain_error("make_params: sigma must be positive");
    if (!(beta != 0.0) || std::isnan(beta))
        throw std::domain_error("make_params: beta must be nonzero");
    return ModelParams{sigma, beta,
                       beta < 0.0 ? Regime::Focusing : Regime::Defocusing,
                       sigma >= 0.5};
}

CriticalConstants critical_constants(const ModelParams& p) {
    constexpr double pi = std::numbers::pi;
    CriticalConstants c;
    c.omega_tilde = 4.0 * std::exp(-2.0 * euler_gamma);
    if (p.regime != Regime::Focusing)
        return c;

    const double s = p.sigma;
    const double base = -4.0 * pi * s * p.beta;  // > 0 in the focusing regime
    c.omega_bar = 4.0 * std::exp(-2.0 * euler_gamma + 1.0 / s);
    c.q_bar = std::pow(base, -1.0 / (2.0 * s));
    c.lambda_threshold = -s / (4.0 * pi * (s + 1.0) * std::pow(base, 1.0 / s));
    c.mu_bar = std::exp(2.0 * euler_gamma - 1.0 / s) / (16.0 * pi * std::pow(base, 1.0 / s));

    // The threshold must coincide with the standing-wave energy at q_bar;
    // a mismatch means the closed forms were transcribed inconsistently.
    const double qb = *c.q_bar;
    const double e_qbar =
        -qb * qb / (4.0 * pi) - s * p.beta * std::pow(qb, 2.0 * s + 2.0) / (s + 1.0);
    if (std::abs(e_qbar - *c.lambda_threshold) > 1e-12 * std::abs(*c.lambda_threshold))
        throw std::logic_error("critical_constants: energy threshold fails its cross-check");

    return c;
}

}  // namespace cnls
