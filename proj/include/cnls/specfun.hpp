#ifndef CNLS_SPECFUN_HPP
#define CNLS_SPECFUN_HPP

#include <functional>
#include <stdexcept>

namespace cnls {

// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

/// Thrown when the adaptive quadrature cannot certify the requested
/// absolute tolerance (non-integrable tail or evaluation budget exhausted).
class quadrature_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Modified Bessel function of the second kind, order zero (Macdonald
/// function). Relative error <= 1e-10 on (0, inf); underflows to zero
/// for large arguments (x > ~745) where exp(-x) leaves the double range.
/// Throws std::domain_error for x <= 0.
double macdonald_k0(double x);

/// Exponentially scaled variant e^x * K0(x); does not underflow.
double macdonald_k0_scaled(double x);

// Individual evaluation branches, exposed so consistency between them can
// be checked in the crossover window. macdonald_k0 dispatches at x = 2.
double macdonald_k0_series(double x);      // ascending series, 0 < x <= ~3
double macdonald_k0_asymptotic(double x);  // scaled Chebyshev branch, x >= 1.5

/// Green's function of -Laplacian + lambda in 2D evaluated at radius r:
/// K0(sqrt(lambda) * r) / (2 pi). Throws std::domain_error unless
/// lambda > 0 and r > 0.
double green_function(double lambda, double r);

struct QuadratureResult {
    double value;
    double abs_error_estimate;  // >= 0, includes the analytic tail bound
    long evaluations;           // > 0, integrand evaluation count
};

/// Adaptive evaluation of the radial integral
///     integral_0^inf f(k) * k dk
/// for an integrand f with an eventual power-law envelope |f(k)| <= A k^p,
/// p = tail_exponent. A Gauss-Kronrod 7/15 pair is subdivided adaptively on
/// [0, K]; the cutoff K grows until the analytic tail bound
/// A K^(p+2) / (-(p+2)) drops below 10% of the tolerance. The bound only
/// converges for p < -2; otherwise the integral (with the k factor) has a
/// non-integrable tail and quadrature_error is thrown.
QuadratureResult radial_fourier_quadrature(const std::function<double(double)>& integrand,
                                           double tail_exponent,
                                           double abs_tol = 1e-9);

}  // namespace cnls

#endif
