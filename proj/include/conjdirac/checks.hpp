#pragma once

#include <string>
#include <vector>

#include "conjdirac/core.hpp"

namespace conjdirac {

/// One line of the verification suite.
struct CheckRow {
    std::string check;
    int n = 0;
    int kappa = 0;
    std::string label;
    std::string method;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    /// Relative residual tolerance with analytic derivatives.
    double tolerance = 1e-8;
    /// Relative residual tolerance with finite-difference derivatives.
    double fd_tolerance = 1e-6;
};

inline constexpr double kRoundTripUlps = 8.0;
inline constexpr double kNormalizationTolerance = 1e-9;
inline constexpr double kOrthogonalityTolerance = 1e-8;
inline constexpr double kQuantizationTolerance = 1e-12;
/// Sommerfeld expansion bound in units of alpha^6.
inline constexpr double kExpansionAlpha6 = 5.0;

/**
 * Runs every residual family (analytic and finite-difference), the
 * transform round trip, quantization closure, normalization,
 * same-kappa orthogonality and the expansion check for all states
 * with n <= n_max. Row order is fixed.
 */
std::vector<CheckRow> run_verification(int n_max, const PhysicsConfig& config, const VerifyOptions& options);

bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace conjdirac
