#include "conjdirac/spectrum.hpp"

#include <cmath>

namespace conjdirac {

EnergyValue energy(const QuantumState& state, const PhysicsConfig& config) {
    const double alpha = config.alpha();
    const double shifted = state.n_r + state.gamma;
    const double d = std::hypot(shifted, alpha);
    return EnergyValue{shifted / d, alpha / d};
}

double quantization_a(const QuantumState& state, const EnergyValue& e, const PhysicsConfig& config) {
    if (!(e.lambda > 0.0)) {
        throw InvalidArgument("quantization_a: lambda must be positive (alpha > 0)");
    }
    return state.gamma - config.alpha() * e.value / e.lambda;
}

double fine_structure_splitting(int n, int kappa_a, int kappa_b, const PhysicsConfig& config) {
    const auto a = make_state(n, kappa_a, HalfInteger{1}, config);
    const auto b = make_state(n, kappa_b, HalfInteger{1}, config);
    return (energy(a, config).value - energy(b, config).value) * config.rest_energy_ev();
}

double sommerfeld_expansion(int n, HalfInteger j, const PhysicsConfig& config) {
    if (n < 1 || j.twice < 1 || j.twice % 2 == 0 || (j.twice + 1) / 2 > n) {
        throw InvalidArgument("sommerfeld_expansion: invalid (n, j)");
    }
    const double a2 = config.alpha() * config.alpha();
    const double nn = n;
    return 1.0 - a2 / (2.0 * nn * nn) - a2 * a2 / (2.0 * nn * nn * nn * nn) * (nn / (j.value() + 0.5) - 0.75);
}

std::vector<QuantumState> enumerate_states(int n_max, const PhysicsConfig& config) {
    if (n_max < 1) {
        throw InvalidArgument("n_max must be >= 1");
    }
    std::vector<QuantumState> out;
    for (int n = 1; n <= n_max; ++n) {
        for (int ak = 1; ak <= n; ++ak) {
            out.push_back(make_state(n, -ak, HalfInteger{1}, config));
            if (ak < n) {
                out.push_back(make_state(n, ak, HalfInteger{1}, config));
            }
        }
    }
    return out;
}

std::vector<SpectrumRow> spectrum_table(int n_max, const PhysicsConfig& config) {
    std::vector<SpectrumRow> rows;
    for (const auto& s : enumerate_states(n_max, config)) {
        const auto e = energy(s, config);
        SpectrumRow row;
        row.n = s.n;
        row.kappa = s.kappa;
        row.l = s.l;
        row.j = s.j;
        row.n_r = s.n_r;
        row.label = s.label();
        row.e_over_mc2 = e.value;
        row.lambda = e.lambda;
        row.binding_ev = convert_energy(e, config).binding;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace conjdirac
