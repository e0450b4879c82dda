#pragma once

#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "conjdirac/core.hpp"

namespace conjdirac {

/// Strictly increasing radii r_i > 0 in reduced Compton wavelengths.
class RadialGrid {
public:
    explicit RadialGrid(std::vector<double> radii);

    static RadialGrid log_spaced(double r_min, double r_max, int points);
    static RadialGrid linear(double r_min, double r_max, int points);
    /// 2000 log-spaced points from 1e-3/alpha to 50 n^2/alpha.
    static RadialGrid default_for(const QuantumState& state, const PhysicsConfig& config);

    const std::vector<double>& radii() const noexcept { return radii_; }
    std::size_t size() const noexcept { return radii_.size(); }
    double operator[](std::size_t i) const { return radii_[i]; }
    double front() const { return radii_.front(); }
    double back() const { return radii_.back(); }

private:
    std::vector<double> radii_;
};

/// A quantized state together with its energy and the config it was built with.
struct BoundSolution {
    PhysicsConfig config;
    QuantumState state;
    EnergyValue energy;

    /// Builds the state and its spectrum energy; requires alpha > 0.
    static BoundSolution make(int n, int kappa, HalfInteger m_j, const PhysicsConfig& config);
    static BoundSolution make(const QuantumState& state, const PhysicsConfig& config);

    double kummer_a() const noexcept { return -static_cast<double>(state.n_r); }
    double kummer_b() const noexcept { return 2.0 * state.gamma + 1.0; }
};

/**
 * eta1 = alpha - kappa lambda, eta2 = gamma lambda - alpha E.
 *
 * With the quantized energy eta2 reduces to -n_r lambda, which is how it is
 * evaluated here: exactly zero for n_r = 0.
 */
struct EtaCoefficients {
    double eta1 = 0.0;
    double eta2 = 0.0;
};

EtaCoefficients eta_coefficients(const BoundSolution& sol);

/// Value and first two radial derivatives of a radial function.
struct RadialJet {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// Un-normalized g(r) = e^{-lambda r} r^{gamma-1} M(-n_r, 2 gamma + 1, 2 lambda r).
double radial_phi(const BoundSolution& sol, double r);
RadialJet radial_phi_jet(const BoundSolution& sol, double r);

/// g~(r) = (eta2/eta1) e^{-lambda r} r^{gamma-1} M(1 - n_r, 2 gamma + 1, 2 lambda r).
double radial_phi_tilde(const BoundSolution& sol, double r);
RadialJet radial_phi_tilde_jet(const BoundSolution& sol, double r);

/**
 * Real radial factors of the Dirac bi-spinor.
 *
 * Psi_a = psi_a Y_{kappa m} and Psi_b = i psi_b (sigma.r_hat) Y_{kappa m}
 * = -i psi_b Y_{-kappa m}. The factor i and the spinor flip are implied by
 * the flags below and never stored in the amplitudes.
 */
struct BispinorRadials {
    double psi_a = 0.0;
    double psi_b = 0.0;

    static constexpr bool kLowerHasImaginaryUnit = true;
    static constexpr bool kLowerUsesFlippedSpinor = true;
};

/// psi_a = sqrt(1+E)(g + g~), psi_b = sqrt(1-E)(g - g~).
BispinorRadials assemble_bispinor_radials(const BoundSolution& sol, double r);
/// Same amplitudes from the eta-weighted Kummer combination.
BispinorRadials assemble_bispinor_radials_eta(const BoundSolution& sol, double r);
/// Composes the bi-spinor from given conjugate amplitudes.
BispinorRadials bispinor_from_conjugate(double phi, double phi_tilde, const EnergyValue& e);

struct ConjugateRadials {
    double phi = 0.0;
    double phi_tilde = 0.0;
};

/// Inverse map: phi = [psi_a/sqrt(1+E) + psi_b/sqrt(1-E)]/2, phi~ with the minus sign.
ConjugateRadials conjugate_transform(double psi_a, double psi_b, const EnergyValue& e);

enum class ProfileKind { phi, phi_tilde, psi_a, psi_b };

std::string_view to_string(ProfileKind kind);

struct RadialProfile {
    QuantumState state;
    ProfileKind kind = ProfileKind::phi;
    RadialGrid grid{{1.0}};
    std::vector<double> values;
    double normalization = 1.0;
};

RadialProfile tabulate(const BoundSolution& sol, ProfileKind kind, const RadialGrid& grid, double normalization = 1.0);

struct NormalizationResult {
    double constant = 1.0;
    /// Un-normalized integral of (psi_a^2 + psi_b^2) r^2.
    double integral = 0.0;
    /// Difference between the 8- and 16-point Gauss-Legendre estimates.
    double error_estimate = 0.0;
};

using RadialPairFunction = std::function<BispinorRadials(double)>;

/// Integral of (psi_a^2 + psi_b^2) r^2 over [0, grid.back()], panel-wise on the grid.
NormalizationResult normalization_integral(const RadialPairFunction& f, const RadialGrid& grid);

/**
 * N_{n kappa} with int (psi_a^2 + psi_b^2) r^2 dr = 1.
 * Throws NumericalError when the relative quadrature error exceeds 1e-9.
 */
NormalizationResult normalize(const BoundSolution& sol, const RadialGrid& grid);
NormalizationResult normalize(const BoundSolution& sol);

/// int (psi_a psi_a' + psi_b psi_b') r^2 dr of two normalized states.
double radial_overlap(const BoundSolution& a, const BoundSolution& b, const RadialGrid& grid);

/// Number of sign changes in a sampled profile, ignoring exact zeros.
int count_sign_changes(const std::vector<double>& values);

}  // namespace conjdirac
