#ifndef CNLS_STABILITY_HPP
#define CNLS_STABILITY_HPP

#include <cnls/model.hpp>

#include <optional>
#include <stdexcept>

namespace cnls {

enum class StabilityVerdict { Stable, Unstable };

/// Thrown by classify_stability at omega == omega_bar exactly, where the
/// dichotomy is silent.
class unclassified_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Spectral data of the linearization around the standing wave at omega.
/// The spectrum is {isolated_point} u {0} u [omega, inf); the isolated point
/// omega (1 - e^{-8 pi beta sigma q^{2 sigma}}) is negative exactly in the
/// focusing regime, in which case it is also exposed as negative_eigenvalue.
struct SpectrumReport {
    double omega;
    double alpha1;  // (2 sigma + 1) beta q^{2 sigma}, real-part coupling
    double alpha2;  // beta q^{2 sigma}, imaginary-part coupling
    double isolated_point;
    std::optional<double> negative_eigenvalue;  // present iff focusing
    bool zero_mode_present;                     // always true (phase mode)
    double essential_threshold;                 // bottom of the essential spectrum, = omega
    int vk_slope_sign;                          // sign of M'(omega)
    std::optional<StabilityVerdict> verdict;    // absent only at omega == omega_bar
};

/// Unique negative eigenvalue -4 e^{-4 pi alpha - 2 gamma} of the 2D point
/// interaction with strength alpha (every real alpha binds one state).
double point_interaction_eigenvalue(double alpha);

SpectrumReport linearization_spectrum(const ModelParams& p, double omega);

/// Orbital stability of the standing wave at omega. Focusing: Stable iff
/// omega < omega_bar, Unstable iff omega > omega_bar, unclassified_error at
/// omega == omega_bar. Defocusing: always Stable.
StabilityVerdict classify_stability(const ModelParams& p, double omega);

}  // namespace cnls

#endif
