#pragma once

#include <string>
#include <vector>

#include "conjdirac/core.hpp"

namespace conjdirac {

struct SpectrumRow {
    int n = 1;
    int kappa = -1;
    int l = 0;
    HalfInteger j{1};
    int n_r = 0;
    std::string label;
    double e_over_mc2 = 1.0;
    double lambda = 0.0;
    double binding_ev = 0.0;
};

/**
 * Bound-state energy E = m0c^2 [1 + alpha^2/(n_r + gamma)^2]^{-1/2}.
 *
 * Evaluated as E = (n_r + gamma)/D and lambda = alpha/D with
 * D = sqrt((n_r + gamma)^2 + alpha^2), so neither loses digits at small alpha.
 */
EnergyValue energy(const QuantumState& state, const PhysicsConfig& config);

/// a = gamma - alpha E/lambda; equals -n_r for a quantized energy.
double quantization_a(const QuantumState& state, const EnergyValue& e, const PhysicsConfig& config);

/// [E(n, kappa_a) - E(n, kappa_b)] in eV.
double fine_structure_splitting(int n, int kappa_a, int kappa_b, const PhysicsConfig& config);

/// O(alpha^4) expansion 1 - a^2/2n^2 - (a^4/2n^4)(n/(j+1/2) - 3/4).
double sommerfeld_expansion(int n, HalfInteger j, const PhysicsConfig& config);

/// All (n, kappa) states with n <= n_max sorted by (n, |kappa|, kappa).
std::vector<QuantumState> enumerate_states(int n_max, const PhysicsConfig& config);

std::vector<SpectrumRow> spectrum_table(int n_max, const PhysicsConfig& config);

}  // namespace conjdirac
