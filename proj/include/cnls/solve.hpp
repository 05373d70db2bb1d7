#ifndef CNLS_SOLVE_HPP
#define CNLS_SOLVE_HPP

#include <cnls/model.hpp>

#include <stdexcept>

namespace cnls {

/// Thrown when an adaptive bracket cannot straddle a root (only reachable
/// through floating-point underflow/overflow at extreme parameters).
class bracket_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The two standing waves of a given mass mu in (0, mu_bar), one on each
/// monotone branch of M(omega). Residuals are relative: |M(omega) - mu| / mu.
struct MassInversionResult {
    double mu;
    double omega_low;   // in (omega_tilde, omega_bar)
    double omega_high;  // in (omega_bar, inf)
    double residual_low;
    double residual_high;
};

/// The defocusing ground-state frequency: the unique solution of
/// log(2/sqrt(omega)) - gamma = 2 pi beta (4 pi omega mu)^sigma in
/// (0, omega_tilde). residual is the absolute defect |lhs - rhs| at the root.
struct GroundStateResult {
    double mu;
    double omega_mu;
    double energy;
    double charge;
    double residual;
};

GroundStateResult ground_state_frequency(const ModelParams& p, double mu);

MassInversionResult invert_mass_focusing(const ModelParams& p, double mu);

/// Energy of the n-th element of the fixed-mass escape sequence
/// u_n = 2 sqrt(pi mu n) G_1(sqrt(n) x), which drives the energy to -inf in
/// the focusing regime. n must be a positive integer.
double escape_sequence_energy(const ModelParams& p, double mu, long n);

namespace detail {
// Real-n extension of the escape-sequence energy, used for monotonicity scans.
double escape_sequence_energy_real(const ModelParams& p, double mu, double n);
}  // namespace detail

/// f(q) - f(q(omega_mu)) for the defocusing lower-bound function
/// f(q) = -omega_mu mu + (beta q^{2 sigma}/(sigma+1)
///         + (log(sqrt(omega_mu)/2) + gamma)/(2 pi)) q^2,
/// nonnegative with equality only at q = q(omega_mu).
double defocusing_lower_bound_gap(const ModelParams& p, double mu, double q);

}  // namespace cnls

#endif
