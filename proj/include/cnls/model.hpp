#ifndef CNLS_MODEL_HPP
#define CNLS_MODEL_HPP

#include <optional>

namespace cnls {

enum class Regime { Focusing, Defocusing };

/// Nonlinearity power sigma and coupling beta. The regime is determined by
/// the sign of beta: beta < 0 focusing (attractive), beta > 0 defocusing.
struct ModelParams {
    double sigma;
    double beta;
    Regime regime;
    bool wellposed;  // sigma >= 1/2; smaller powers are accepted but flagged
};

/// Validates sigma > 0 and beta != 0 and derives the regime.
/// Throws std::domain_error otherwise.
ModelParams make_params(double sigma, double beta);

/// Critical constants of the standing-wave family. omega_tilde is the
/// endpoint frequency where the wave degenerates (charge -> 0) and exists in
/// both regimes; the remaining constants only exist for a focusing coupling,
/// hence the optionals.
struct CriticalConstants {
    double omega_tilde;                       // 4 e^{-2 gamma}
    std::optional<double> omega_bar;          // 4 e^{-2 gamma + 1/sigma}
    std::optional<double> q_bar;              // (-4 pi sigma beta)^{-1/(2 sigma)}
    std::optional<double> lambda_threshold;   // min of the standing-wave energy, < 0
    std::optional<double> mu_bar;             // max of the standing-wave mass
};

CriticalConstants critical_constants(const ModelParams& p);

}  // namespace cnls

#endif
