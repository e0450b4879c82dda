#include "conjdirac/wavefn.hpp"

#include <cmath>
#include <string>

#include "conjdirac/quadrature.hpp"
#include "conjdirac/specfun.hpp"
#include "conjdirac/spectrum.hpp"

namespace conjdirac {

RadialGrid::RadialGrid(std::vector<double> radii) : radii_(std::move(radii)) {
    if (radii_.empty()) {
        throw InvalidArgument("radial grid must not be empty");
    }
    if (!(radii_.front() > 0.0)) {
        throw InvalidArgument("radial grid must start at r > 0");
    }
    for (std::size_t i = 1; i < radii_.size(); ++i) {
        if (!(radii_[i] > radii_[i - 1])) {
            throw InvalidArgument("radial grid must be strictly increasing");
        }
    }
}

RadialGrid RadialGrid::log_spaced(double r_min, double r_max, int points) {
    if (!(r_min > 0.0) || !(r_max > r_min) || points < 2) {
        throw InvalidArgument("log grid needs 0 < r_min < r_max and at least 2 points");
    }
    std::vector<double> r(points);
    const double step = std::log(r_max / r_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        r[i] = r_min * std::exp(step * i);
    }
    r.back() = r_max;
    return RadialGrid(std::move(r));
}

RadialGrid RadialGrid::linear(double r_min, double r_max, int points) {
    if (!(r_min > 0.0) || !(r_max > r_min) || points < 2) {
        throw InvalidArgument("linear grid needs 0 < r_min < r_max and at least 2 points");
    }
    std::vector<double> r(points);
    const double step = (r_max - r_min) / (points - 1);
    for (int i = 0; i < points; ++i) {
        r[i] = r_min + step * i;
    }
    r.back() = r_max;
    return RadialGrid(std::move(r));
}

RadialGrid RadialGrid::default_for(const QuantumState& state, const PhysicsConfig& config) {
    if (!(config.alpha() > 0.0)) {
        throw InvalidArgument("radial grids need alpha > 0");
    }
    const double bohr = 1.0 / config.alpha();
    return log_spaced(1e-3 * bohr, 50.0 * state.n * state.n * bohr, 2000);
}

BoundSolution BoundSolution::make(const QuantumState& state, const PhysicsConfig& config) {
    if (!(config.alpha() > 0.0)) {
        throw InvalidArgument("bound-state wave functions need alpha > 0");
    }
    return BoundSolution{config, state, conjdirac::energy(state, config)};
}

BoundSolution BoundSolution::make(int n, int kappa, HalfInteger m_j, const PhysicsConfig& config) {
    return make(make_state(n, kappa, m_j, config), config);
}

EtaCoefficients eta_coefficients(const BoundSolution& sol) {
    const double lambda = sol.energy.lambda;
    return EtaCoefficients{sol.config.alpha() - sol.state.kappa * lambda, -sol.state.n_r * lambda};
}

namespace {

// e^{-lambda r} r^{gamma-1} and its log-derivative q = h'/h.
struct Envelope {
    double h;
    double q;
    double curvature;  // h''/h
};

Envelope envelope(const BoundSolution& sol, double r) {
    if (!(r > 0.0)) {
        throw InvalidArgument("radius must be positive");
    }
    const double lambda = sol.energy.lambda;
    const double p = sol.state.gamma - 1.0;
    const double h = std::exp(-lambda * r + p * std::log(r));
    const double q = -lambda + p / r;
    return Envelope{h, q, q * q - p / (r * r)};
}

RadialJet kummer_jet(const BoundSolution& sol, double a, const Envelope& env, double r) {
    const double b = sol.kummer_b();
    const double lambda = sol.energy.lambda;
    const double rho = 2.0 * lambda * r;
    const double f = kummer_m(a, b, rho);
    const double fr = 2.0 * lambda * kummer_m_derivative(a, b, rho);
    const double frr = 4.0 * lambda * lambda * kummer_m_second_derivative(a, b, rho);
    return RadialJet{env.h * f, env.h * (env.q * f + fr), env.h * (env.curvature * f + 2.0 * env.q * fr + frr)};
}

double tilde_coefficient(const BoundSolution& sol) {
    const auto eta = eta_coefficients(sol);
    return eta.eta2 / eta.eta1;
}

}  // namespace

double radial_phi(const BoundSolution& sol, double r) {
    const auto env = envelope(sol, r);
    return env.h * kummer_m(sol.kummer_a(), sol.kummer_b(), 2.0 * sol.energy.lambda * r);
}

RadialJet radial_phi_jet(const BoundSolution& sol, double r) {
    return kummer_jet(sol, sol.kummer_a(), envelope(sol, r), r);
}

double radial_phi_tilde(const BoundSolution& sol, double r) {
    const auto env = envelope(sol, r);
    if (sol.state.n_r == 0) {
        return 0.0;
    }
    return tilde_coefficient(sol) * env.h *
           kummer_m(sol.kummer_a() + 1.0, sol.kummer_b(), 2.0 * sol.energy.lambda * r);
}

RadialJet radial_phi_tilde_jet(const BoundSolution& sol, double r) {
    const auto env = envelope(sol, r);
    if (sol.state.n_r == 0) {
        return RadialJet{};
    }
    const double c = tilde_coefficient(sol);
    const auto jet = kummer_jet(sol, sol.kummer_a() + 1.0, env, r);
    return RadialJet{c * jet.value, c * jet.d1, c * jet.d2};
}

BispinorRadials bispinor_from_conjugate(double phi, double phi_tilde, const EnergyValue& e) {
    return BispinorRadials{std::sqrt(1.0 + e.value) * (phi + phi_tilde),
                           std::sqrt(1.0 - e.value) * (phi - phi_tilde)};
}

BispinorRadials assemble_bispinor_radials(const BoundSolution& sol, double r) {
    return bispinor_from_conjugate(radial_phi(sol, r), radial_phi_tilde(sol, r), sol.energy);
}

BispinorRadials assemble_bispinor_radials_eta(const BoundSolution& sol, double r) {
    const auto env = envelope(sol, r);
    const auto eta = eta_coefficients(sol);
    const double rho = 2.0 * sol.energy.lambda * r;
    const double f0 = kummer_m(sol.kummer_a(), sol.kummer_b(), rho);
    const double f1 = sol.state.n_r == 0 ? 0.0 : kummer_m(sol.kummer_a() + 1.0, sol.kummer_b(), rho);
    const double scale = env.h / eta.eta1;
    return BispinorRadials{std::sqrt(1.0 + sol.energy.value) * scale * (eta.eta1 * f0 + eta.eta2 * f1),
                           std::sqrt(1.0 - sol.energy.value) * scale * (eta.eta1 * f0 - eta.eta2 * f1)};
}

ConjugateRadials conjugate_transform(double psi_a, double psi_b, const EnergyValue& e) {
    if (!(e.value > 0.0 && e.value < 1.0)) {
        throw InvalidArgument("conjugate_transform: E must lie in (0, 1)");
    }
    const double upper = psi_a / std::sqrt(1.0 + e.value);
    const double lower = psi_b / std::sqrt(1.0 - e.value);
    return ConjugateRadials{0.5 * (upper + lower), 0.5 * (upper - lower)};
}

std::string_view to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::phi:
            return "phi";
        case ProfileKind::phi_tilde:
            return "phi_tilde";
        case ProfileKind::psi_a:
            return "psi_a";
        case ProfileKind::psi_b:
            return "psi_b";
    }
    return "unknown";
}

RadialProfile tabulate(const BoundSolution& sol, ProfileKind kind, const RadialGrid& grid, double normalization) {
    RadialProfile profile{sol.state, kind, grid, {}, normalization};
    profile.values.reserve(grid.size());
    for (double r : grid.radii()) {
        double v = 0.0;
        switch (kind) {
            case ProfileKind::phi:
                v = radial_phi(sol, r);
                break;
            case ProfileKind::phi_tilde:
                v = radial_phi_tilde(sol, r);
                break;
            case ProfileKind::psi_a:
                v = assemble_bispinor_radials(sol, r).psi_a;
                break;
            case ProfileKind::psi_b:
                v = assemble_bispinor_radials(sol, r).psi_b;
                break;
        }
        profile.values.push_back(normalization * v);
    }
    return profile;
}

NormalizationResult normalization_integral(const RadialPairFunction& f, const RadialGrid& grid) {
    static const auto coarse = GaussLegendreRule::make(8);
    static const auto fine = GaussLegendreRule::make(16);
    auto density = [&](double r) {
        const auto v = f(r);
        return (v.psi_a * v.psi_a + v.psi_b * v.psi_b) * r * r;
    };
    double lo_sum = coarse.integrate(density, 0.0, grid.front());
    double hi_sum = fine.integrate(density, 0.0, grid.front());
    const auto& r = grid.radii();
    for (std::size_t i = 1; i < r.size(); ++i) {
        lo_sum += coarse.integrate(density, r[i - 1], r[i]);
        hi_sum += fine.integrate(density, r[i - 1], r[i]);
    }
    if (!std::isfinite(hi_sum) || !(hi_sum > 0.0)) {
        throw NumericalError("normalization integral is not positive and finite");
    }
    return NormalizationResult{1.0 / std::sqrt(hi_sum), hi_sum, std::abs(hi_sum - lo_sum)};
}

NormalizationResult normalize(const BoundSolution& sol, const RadialGrid& grid) {
    auto result = normalization_integral([&](double r) { return assemble_bispinor_radials(sol, r); }, grid);
    if (result.error_estimate > 1e-9 * result.integral) {
        throw NumericalError("normalization quadrature error " + std::to_string(result.error_estimate / result.integral) +
                             " exceeds 1e-9");
    }
    return result;
}

NormalizationResult normalize(const BoundSolution& sol) {
    return normalize(sol, RadialGrid::default_for(sol.state, sol.config));
}

double radial_overlap(const BoundSolution& a, const BoundSolution& b, const RadialGrid& grid) {
    const double na = normalize(a, grid).constant;
    const double nb = normalize(b, grid).constant;
    static const auto rule = GaussLegendreRule::make(16);
    auto density = [&](double r) {
        const auto va = assemble_bispinor_radials(a, r);
        const auto vb = assemble_bispinor_radials(b, r);
        return (va.psi_a * vb.psi_a + va.psi_b * vb.psi_b) * r * r;
    };
    double sum = rule.integrate(density, 0.0, grid.front());
    const auto& r = grid.radii();
    for (std::size_t i = 1; i < r.size(); ++i) {
        sum += rule.integrate(density, r[i - 1], r[i]);
    }
    return na * nb * sum;
}

int count_sign_changes(const std::vector<double>& values) {
    int changes = 0;
    int last_sign = 0;
    for (double v : values) {
        const int s = (v > 0.0) - (v < 0.0);
        if (s == 0) {
            continue;
        }
        if (last_sign != 0 && s != last_sign) {
            ++changes;
        }
        last_sign = s;
    }
    return changes;
}

}  // namespace conjdirac
