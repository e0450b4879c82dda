#include "conjdirac/checks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "conjdirac/spectrum.hpp"
#include "conjdirac/verify.hpp"
#include "conjdirac/wavefn.hpp"

namespace conjdirac {

namespace {

CheckRow make_row(std::string check, const QuantumState& s, std::string method, double value, double tolerance) {
    return CheckRow{std::move(check), s.n, s.kappa, s.label(), std::move(method), value, tolerance,
                    std::isfinite(value) && value <= tolerance};
}

std::string residual_name(const ResidualReport& r) {
    std::string name(to_string(r.equation));
    if (r.equation == EquationId::dirac_radial_system) {
        name += "_" + std::to_string(r.component);
    }
    return name;
}

}  // namespace

std::vector<CheckRow> run_verification(int n_max, const PhysicsConfig& config, const VerifyOptions& options) {
    if (!(config.alpha() > 0.0)) {
        throw InvalidArgument("verification needs alpha > 0");
    }
    const auto states = enumerate_states(n_max, config);
    std::vector<CheckRow> rows;

    for (const auto& state : states) {
        const auto sol = BoundSolution::make(state, config);
        const auto grid = RadialGrid::default_for(state, config);

        for (auto method : {DerivativeMethod::analytic, DerivativeMethod::central_difference}) {
            ResidualOptions ro;
            ro.oracle.method = method;
            ro.tolerance = method == DerivativeMethod::analytic ? options.tolerance : options.fd_tolerance;
            for (const auto& rep : residual_suite(sol, grid, ro)) {
                auto row = make_row(residual_name(rep), state, std::string(to_string(method)), rep.relative_norm,
                                    rep.tolerance);
                row.pass = rep.pass;
                rows.push_back(std::move(row));
            }
        }

        rows.push_back(make_row("round_trip_ulps", state, "exact", round_trip_ulps(sol, grid), kRoundTripUlps));

        const double a = quantization_a(state, sol.energy, config);
        rows.push_back(make_row("quantization", state, "exact", std::abs(a + state.n_r), kQuantizationTolerance));

        // Re-integrate on a refined grid that shares no panels with the default one.
        const auto norm = normalize(sol, grid);
        const auto refined = RadialGrid::log_spaced(0.7 * grid.front(), 2.0 * grid.back(), 2 * static_cast<int>(grid.size()) + 1);
        const auto check = normalization_integral([&](double r) { return assemble_bispinor_radials(sol, r); }, refined);
        rows.push_back(make_row("normalization", state, "quadrature",
                                std::abs(norm.constant * norm.constant * check.integral - 1.0),
                                kNormalizationTolerance));

        const double alpha6 = std::pow(config.alpha(), 6);
        const double expansion = sommerfeld_expansion(state.n, state.j, config);
        rows.push_back(make_row("sommerfeld_expansion", state, "exact", std::abs(sol.energy.value - expansion),
                                kExpansionAlpha6 * alpha6));
    }

    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t k = i + 1; k < states.size(); ++k) {
            if (states[i].kappa != states[k].kappa) {
                continue;
            }
            const auto a = BoundSolution::make(states[i], config);
            const auto b = BoundSolution::make(states[k], config);
            const auto grid = RadialGrid::default_for(states[k], config);
            auto row = make_row("orthogonality", states[i], "quadrature", std::abs(radial_overlap(a, b, grid)),
                                kOrthogonalityTolerance);
            row.label += "|" + states[k].label();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

bool all_pass(const std::vector<CheckRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

}  // namespace conjdirac
