#ifndef CNLS_WAVES_HPP
#define CNLS_WAVES_HPP

#include <cnls/model.hpp>

namespace cnls {

// The admissible frequencies form an open interval per regime:
// (omega_tilde, inf) focusing, (0, omega_tilde) defocusing. Endpoints are
// rejected because the charge vanishes there and the wave degenerates.

enum class Branch { FocusingStable, FocusingUnstable, Defocusing };

/// A standing wave is fully described by (omega, q); the profile is
/// q * green_function(omega, r) evaluated on demand. mass and energy are the
/// closed-form values; branch records the side of omega_bar (the degenerate
/// omega == omega_bar wave is tagged with the high-frequency branch).
struct StandingWave {
    double omega;
    double q;
    double mass;
    double energy;
    Branch branch;
};

double charge_of_frequency(const ModelParams& p, double omega);
double frequency_of_charge(const ModelParams& p, double q);
double energy_of_frequency(const ModelParams& p, double omega);
double energy_of_charge(const ModelParams& p, double q);
double mass_of_frequency(const ModelParams& p, double omega);
double mass_of_charge(const ModelParams& p, double q);

/// h(omega) = 1/(2 sigma (log(sqrt(omega)/2) + gamma)) - 1. The mass slope
/// M'(omega) equals q^2/(4 pi omega^2) * h(omega), so sign(h) = sign(M').
double mass_slope_indicator(const ModelParams& p, double omega);

/// Assembles the StandingWave record at the given frequency.
StandingWave standing_wave(const ModelParams& p, double omega);

/// L2 inner product of two Green's functions <G_l1, G_l2>.
struct GreenPairing {
    double lambda1;
    double lambda2;
    double l2_inner;
};

/// Closed form: 1/(4 pi lambda) on the diagonal, log(l2/l1)/(4 pi (l2-l1))
/// off it (continuous across the diagonal). Symmetric and positive.
GreenPairing green_l2_pairing(double lambda1, double lambda2);

/// Distance between two standing waves in the energy-space norm
/// ||chi||^2 = ||chi_ref||^2_{H^1} + |q_chi|^2 / (4 pi lambda_ref), where
/// chi_ref is the regular part of the decomposition against G_{lambda_ref}.
/// The H^1 term is evaluated by radial Fourier quadrature; convergence
/// failures propagate as quadrature_error.
double vnorm_distance(const ModelParams& p, const StandingWave& w1, const StandingWave& w2,
                      double lambda_ref = 1.0);

}  // namespace cnls

#endif
