#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "conjdirac/wavefn.hpp"

namespace conjdirac {

/// Derivatives on a non-uniform grid from five-point Lagrange stencils.
/// Centered stencils in the interior, one-sided at the two outermost points
/// on each side. order is 1 or 2; needs at least five points.
std::vector<double> finite_difference(std::span<const double> values, const RadialGrid& grid, int order);

enum class DerivativeMethod { analytic, central_difference };

std::string_view to_string(DerivativeMethod method);

struct DerivativeOracle {
    DerivativeMethod method = DerivativeMethod::analytic;
};

enum class EquationId {
    conj_first_order_1,
    conj_first_order_2,
    second_order,
    phi_tilde_relation,
    dirac_radial_system,
};

std::string_view to_string(EquationId id);

struct ResidualOptions {
    DerivativeOracle oracle{};
    double tolerance = 1e-8;
    /// Fraction of points dropped at each end of the grid before taking norms.
    double edge_fraction = 0.02;
};

struct ResidualReport {
    EquationId equation = EquationId::second_order;
    /// 1 or 2 for the members of a coupled pair, 0 otherwise.
    int component = 0;
    QuantumState state;
    DerivativeMethod method = DerivativeMethod::analytic;
    std::vector<double> radii;
    std::vector<double> residual;
    /// max |residual| / max largest-term magnitude over the interior.
    double relative_norm = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Sampled jets of g and g~ on a grid.
struct ConjugateSamples {
    std::vector<RadialJet> phi;
    std::vector<RadialJet> phi_tilde;
};

/// Sampled jets of G = r psi_a and F = -r psi_b (the coefficient of i Y_{-kappa m}).
struct DiracSamples {
    std::vector<RadialJet> upper;
    std::vector<RadialJet> lower;
};

ConjugateSamples sample_conjugate(const BoundSolution& sol, const RadialGrid& grid, DerivativeOracle oracle);
DiracSamples sample_dirac(const BoundSolution& sol, const RadialGrid& grid, DerivativeOracle oracle);
/// Rebuilds derivatives of already-sampled values by finite differences.
void refresh_derivatives(std::vector<RadialJet>& jets, const RadialGrid& grid);

/// max_i |residual_i| / max_i term_scale_i over the interior defined by edge_fraction.
double relative_norm(std::span<const double> residual, std::span<const double> term_scale, double edge_fraction);

/// First-order conjugate pair, K replaced by kappa and V = -alpha/r.
std::pair<ResidualReport, ResidualReport> residual_conjugate_first_order(const BoundSolution& sol,
                                                                         const ConjugateSamples& samples,
                                                                         const RadialGrid& grid,
                                                                         const ResidualOptions& options);
std::pair<ResidualReport, ResidualReport> residual_conjugate_first_order(const BoundSolution& sol,
                                                                         const RadialGrid& grid,
                                                                         const ResidualOptions& options);

/**
 * -lap g + g - (E + alpha/r)^2 g - Gamma g with
 * lap g = g'' + 2g'/r - l(l+1) g/r^2 and
 * Gamma g = lambda g/r + g'/r - (sigma.L) g/r^2, sigma.L = -(1 + kappa).
 * include_gamma = false drops the spin term (Klein-Gordon form).
 */
ResidualReport residual_second_order(const BoundSolution& sol, const ConjugateSamples& samples, const RadialGrid& grid,
                                     const ResidualOptions& options, bool include_gamma = true);
ResidualReport residual_second_order(const BoundSolution& sol, const RadialGrid& grid, const ResidualOptions& options,
                                     bool include_gamma = true);

/// g~ (alpha - lambda kappa)/lambda - [r d/dr + lambda r - alpha E/lambda + 1] g.
ResidualReport residual_phi_tilde_relation(const BoundSolution& sol, const ConjugateSamples& samples,
                                           const RadialGrid& grid, const ResidualOptions& options);
ResidualReport residual_phi_tilde_relation(const BoundSolution& sol, const RadialGrid& grid,
                                           const ResidualOptions& options);

/**
 * Radial Dirac-Coulomb system for G = r psi_a, F = -r psi_b:
 *   G' + (kappa/r) G - (E - V + 1) F = 0
 *   F' - (kappa/r) F + (E - V - 1) G = 0,   V = -alpha/r.
 */
std::pair<ResidualReport, ResidualReport> residual_dirac_radial_system(const BoundSolution& sol,
                                                                       const DiracSamples& samples,
                                                                       const RadialGrid& grid,
                                                                       const ResidualOptions& options);
std::pair<ResidualReport, ResidualReport> residual_dirac_radial_system(const BoundSolution& sol,
                                                                       const RadialGrid& grid,
                                                                       const ResidualOptions& options);

/// Every residual family for one state: six reports in a fixed order.
std::vector<ResidualReport> residual_suite(const BoundSolution& sol, const RadialGrid& grid,
                                           const ResidualOptions& options);

/// Largest round-trip error of (g, g~) -> (psi_a, psi_b) -> (g, g~) in ulps of max(|g|, |g~|).
double round_trip_ulps(const BoundSolution& sol, const RadialGrid& grid);

}  // namespace conjdirac
