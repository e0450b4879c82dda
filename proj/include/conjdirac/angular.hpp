#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "conjdirac/core.hpp"

namespace conjdirac {

using Complex = std::complex<double>;
/// Two-component spinor value; index 0 is the m_s = +1/2 (upper) component.
using Spinor2 = std::array<Complex, 2>;

inline constexpr int kMaxHarmonicDegree = 25;

/// Orthonormal Y_lm(theta, phi) with the Condon-Shortley phase.
Complex spherical_harmonic(int l, int m, double theta, double phi);

/// Clebsch-Gordan coefficient <l, m_j - m_s; 1/2, m_s | j, m_j> for j = l +/- 1/2.
double cg_coefficient(int l, HalfInteger j, HalfInteger m_j, HalfInteger m_s);

/// Orbital angular momentum carried by kappa.
int orbital_l(int kappa);

/**
 * Spherical spinor Y_{kappa m_j}.
 *
 * Coefficients in the |l, m_j -/+ 1/2> x chi_{+/-1/2} basis are kept so that
 * operator identities can be checked in exact coefficient algebra.
 */
class SphericalSpinor {
public:
    SphericalSpinor(int kappa, HalfInteger m_j);

    int kappa() const noexcept { return kappa_; }
    HalfInteger m_j() const noexcept { return m_j_; }
    int l() const noexcept { return l_; }
    HalfInteger j() const noexcept { return j_; }
    /// CG weights of the upper (m_s = +1/2) and lower (m_s = -1/2) components.
    const std::array<double, 2>& weights() const noexcept { return weights_; }

    Spinor2 operator()(double theta, double phi) const;

private:
    int kappa_;
    HalfInteger m_j_;
    int l_;
    HalfInteger j_;
    std::array<double, 2> weights_;
};

Spinor2 spherical_spinor(int kappa, HalfInteger m_j, double theta, double phi);

/// Multiplies by sigma . r_hat = [[cos t, sin t e^{-i p}], [sin t e^{i p}, -cos t]].
Spinor2 apply_sigma_dot_rhat(const Spinor2& value, double theta, double phi);

/// Eigenvalue of sigma.L on Y_{kappa m} in units of hbar: -(1 + kappa).
double sigma_dot_L_eigenvalue(int kappa);

/// Eigenvalue of K = -hbar - sigma.L on Y_{kappa m}; equals kappa.
double k_operator_eigenvalue(int kappa);

struct AngularOperatorResult {
    std::string operator_name;
    double expected = 0.0;
    double measured = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/**
 * Applies L^2, J_z, J^2, sigma.L and K to the coefficient representation of
 * Y_{kappa m_j} through ladder-operator algebra and reports eigenvalues.
 */
std::vector<AngularOperatorResult> check_operator_eigenvalues(int kappa, HalfInteger m_j, double tolerance = 1e-13);

/// Max over an n_theta x n_phi grid of |(sigma.r_hat) Y_{kappa m} + Y_{-kappa m}|.
double parity_relation_residual(int kappa, HalfInteger m_j, int n_theta = 32, int n_phi = 32);

/// <Y_{k1 m1} | Y_{k2 m2}> by Gauss-Legendre (cos theta) x trapezoid (phi).
Complex spinor_overlap(int kappa1, HalfInteger m1, int kappa2, HalfInteger m2, int n_theta = 32, int n_phi = 32);

}  // namespace conjdirac
