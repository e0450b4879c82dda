#include "conjdirac/core.hpp"

#include <cmath>
#include <string>

namespace conjdirac {

PhysicsConfig::PhysicsConfig(double alpha, double rest_energy_ev)
    : alpha_(alpha), rest_energy_ev_(rest_energy_ev) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw InvalidArgument("alpha must lie in [0, 1), got " + std::to_string(alpha));
    }
    if (!(rest_energy_ev > 0.0) || !std::isfinite(rest_energy_ev)) {
        throw InvalidArgument("rest energy must be positive and finite");
    }
}

HalfInteger HalfInteger::from_double(double value) {
    const double twice = 2.0 * value;
    const double rounded = std::round(twice);
    if (std::abs(twice - rounded) > 1e-9 || std::abs(rounded) > 1e6) {
        throw InvalidArgument("not a half-integer: " + std::to_string(value));
    }
    const int t = static_cast<int>(rounded);
    if (t % 2 == 0) {
        throw InvalidArgument("m_j must be half-odd-integer, got " + std::to_string(value));
    }
    return HalfInteger{t};
}

std::string QuantumState::label() const {
    std::string s = std::to_string(n);
    s += orbital_letter(l);
    s += std::to_string(j.twice) + "/2";
    return s;
}

EnergyValue EnergyValue::from_value(double value) {
    if (!(value > 0.0 && value <= 1.0)) {
        throw InvalidArgument("bound-state energy must lie in (0, 1] m0c^2");
    }
    return EnergyValue{value, std::sqrt((1.0 - value) * (1.0 + value))};
}

double derive_gamma(int kappa, double alpha) {
    if (kappa == 0) {
        throw InvalidArgument("kappa = 0 is not a Dirac state");
    }
    const double k = std::abs(static_cast<double>(kappa));
    if (!(alpha >= 0.0) || alpha >= k) {
        throw InvalidArgument("alpha must satisfy 0 <= alpha < |kappa|");
    }
    // (k - a)(k + a) keeps gamma^2 + alpha^2 = kappa^2 to rounding.
    return std::sqrt((k - alpha) * (k + alpha));
}

QuantumState make_state(int n, int kappa, HalfInteger m_j, const PhysicsConfig& config) {
    if (n < 1) {
        throw InvalidArgument("n must be >= 1");
    }
    if (kappa == 0) {
        throw InvalidArgument("kappa must be nonzero");
    }
    QuantumState s;
    s.n = n;
    s.kappa = kappa;
    const int ak = s.abs_kappa();
    if (ak > n) {
        throw InvalidArgument("|kappa| must not exceed n");
    }
    s.n_r = n - ak;
    if (kappa > 0 && s.n_r == 0) {
        throw InvalidArgument("kappa > 0 requires n_r >= 1 (state " + std::to_string(n) + ", kappa=" +
                              std::to_string(kappa) + " does not exist)");
    }
    s.l = kappa > 0 ? kappa : -kappa - 1;
    s.j = HalfInteger{2 * ak - 1};
    if (m_j.twice % 2 == 0) {
        throw InvalidArgument("m_j must be half-odd-integer");
    }
    if (std::abs(m_j.twice) > s.j.twice) {
        throw InvalidArgument("|m_j| exceeds j");
    }
    s.m_j = m_j;
    s.gamma = derive_gamma(kappa, config.alpha());
    return s;
}

QuantumState make_state(int n, int kappa, double m_j, const PhysicsConfig& config) {
    return make_state(n, kappa, HalfInteger::from_double(m_j), config);
}

EnergyEv convert_energy(const EnergyValue& e, const PhysicsConfig& config) {
    return EnergyEv{e.value * config.rest_energy_ev(), (1.0 - e.value) * config.rest_energy_ev()};
}

char orbital_letter(int l) {
    static constexpr char kLetters[] = "spdfghiklmnoqrtuvwxyz";
    if (l < 0 || l >= static_cast<int>(sizeof(kLetters) - 1)) {
        return '?';
    }
    return kLetters[l];
}

}  // namespace conjdirac
