#include <cnls/stability.hpp>

#include <cnls/specfun.hpp>
#include <cnls/waves.hpp>

#include <cmath>
#include <numbers>

namespace cnls {

namespace {
constexpr double pi = std::numbers::pi;

double ell(double omega) {
    return 0.5 * std::log(omega) - std::numbers::ln2 + euler_gamma;
}
}  // namespace

double point_interaction_eigenvalue(double alpha) {
    return -4.0 * std::exp(-4.0 * pi * alpha - 2.0 * euler_gamma);
}

SpectrumReport linearization_spectrum(const ModelParams& p, double omega) {
    // Validates the frequency interval as a side effect.
    (void)charge_of_frequency(p, omega);
    const double l = ell(omega);

    SpectrumReport r;
    r.omega = omega;
    // beta q^{2 sigma}(omega) = -ell(omega) / (2 pi)
    r.alpha2 = -l / (2.0 * pi);
    r.alpha1 = (2.0 * p.sigma + 1.0) * r.alpha2;
    // omega (1 - e^{-8 pi beta sigma q^{2 sigma}}) = -omega expm1(4 sigma ell)
    r.isolated_point = -omega * std::expm1(4.0 * p.sigma * l);
    if (r.isolated_point < 0.0)
        r.negative_eigenvalue = r.isolated_point;
    r.zero_mode_present = true;
    r.essential_threshold = omega;

    const double h = 1.0 / (2.0 * p.sigma * l) - 1.0;
    r.vk_slope_sign = h > 0.0 ? 1 : (h < 0.0 ? -1 : 0);

    if (p.regime == Regime::Defocusing) {
        r.verdict = StabilityVerdict::Stable;
    } else {
        const double omega_bar = 4.0 * std::exp(-2.0 * euler_gamma + 1.0 / p.sigma);
        if (omega != omega_bar)
            r.verdict = omega < omega_bar ? StabilityVerdict::Stable : StabilityVerdict::Unstable;
    }
    return r;
}

StabilityVerdict classify_stability(const ModelParams& p, double omega) {
    const SpectrumReport r = linearization_spectrum(p, omega);
    if (!r.verdict)
        throw unclassified_error(
            "classify_stability: the dichotomy excludes the critical frequency omega_bar");
    return *r.verdict;
}

}  // namespace cnls
