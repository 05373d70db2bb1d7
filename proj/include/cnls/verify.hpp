#ifndef CNLS_VERIFY_HPP
#define CNLS_VERIFY_HPP

#include <cnls/model.hpp>

#include <string>
#include <vector>

namespace cnls {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

/// Runs the full invariant and oracle-agreement suite for the given
/// parameters: special-function properties, closed-form cross-checks,
/// round-trips, quadrature agreement, stability dichotomies, and solver
/// residuals. Regime-specific checks follow p's regime; fixed-parameter
/// checks always run.
std::vector<CheckResult> run_verification_suite(const ModelParams& p);

}  // namespace cnls

#endif
