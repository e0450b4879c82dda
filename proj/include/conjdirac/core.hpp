#pragma once

#include <stdexcept>
#include <string>

namespace conjdirac {

/// CODATA 2018 fine-structure constant.
inline constexpr double kAlphaCodata = 7.2973525693e-3;
/// Electron rest energy m0 c^2 in eV (CODATA 2018).
inline constexpr double kElectronRestEnergyEv = 510998.95;

/// Thrown for arguments that violate an operation's preconditions.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a numerical procedure fails to reach its accuracy target.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Dimensional context for every computation.
 *
 * Internally everything is in natural units (hbar = c = m0 = 1): lengths are
 * reduced Compton wavelengths and energies are fractions of m0 c^2. The rest
 * energy in eV is only used when converting results at output boundaries.
 *
 * alpha = 0 is accepted as the non-relativistic limit for spectrum studies;
 * wave functions need alpha > 0 (the decay rate vanishes otherwise).
 */
class PhysicsConfig {
public:
    explicit PhysicsConfig(double alpha = kAlphaCodata, double rest_energy_ev = kElectronRestEnergyEv);

    double alpha() const noexcept { return alpha_; }
    double rest_energy_ev() const noexcept { return rest_energy_ev_; }

private:
    double alpha_;
    double rest_energy_ev_;
};

/// Half-odd-integer stored as twice its value (m_j = 1/2 <-> twice = 1).
struct HalfInteger {
    int twice = 1;

    static HalfInteger from_double(double value);
    double value() const noexcept { return 0.5 * twice; }
    friend bool operator==(HalfInteger, HalfInteger) = default;
};

/**
 * One bound state (n, kappa, m_j) plus the derived labels.
 *
 * kappa = -(l+1) for j = l+1/2, kappa = l for j = l-1/2. States with
 * kappa > 0 and n_r = 0 do not exist and are rejected by make_state.
 */
struct QuantumState {
    int n = 1;
    int kappa = -1;
    HalfInteger m_j{1};
    int n_r = 0;
    int l = 0;
    HalfInteger j{1};
    double gamma = 1.0;

    int abs_kappa() const noexcept { return kappa < 0 ? -kappa : kappa; }
    /// Spectroscopic label such as "2p3/2".
    std::string label() const;
};

/// Total energy E/m0c^2 and decay rate lambda = sqrt(1 - E^2).
struct EnergyValue {
    double value = 1.0;
    double lambda = 0.0;

    /// Builds the pair from E, computing lambda in a cancellation-free way.
    static EnergyValue from_value(double value);
};

struct EnergyEv {
    double total = 0.0;
    double binding = 0.0;
};

/// sqrt(kappa^2 - alpha^2). Rejects kappa = 0 and alpha >= |kappa|.
double derive_gamma(int kappa, double alpha);

QuantumState make_state(int n, int kappa, HalfInteger m_j, const PhysicsConfig& config);
QuantumState make_state(int n, int kappa, double m_j, const PhysicsConfig& config);

EnergyEv convert_energy(const EnergyValue& e, const PhysicsConfig& config);

/// Orbital angular momentum letter for l (s, p, d, f, g, h, ...).
char orbital_letter(int l);

}  // namespace conjdirac
