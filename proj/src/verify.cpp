#include "conjdirac/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>

namespace conjdirac {

namespace {

// Fornberg's recursion for derivative weights of orders 0..2 at z.
std::array<std::array<double, 5>, 3> stencil_weights(double z, const std::array<double, 5>& x) {
    std::array<std::array<double, 5>, 3> c{};
    double c1 = 1.0;
    double c4 = x[0] - z;
    c[0][0] = 1.0;
    for (int i = 1; i < 5; ++i) {
        const int mn = std::min(i, 2);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - z;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k) {
                c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c;
}

std::pair<std::size_t, std::size_t> interior(std::size_t n, double edge_fraction) {
    auto skip = static_cast<std::size_t>(std::ceil(edge_fraction * static_cast<double>(n)));
    if (2 * skip >= n) {
        skip = n > 1 ? (n - 1) / 2 : 0;
    }
    return {skip, n - skip};
}

double max_abs(std::initializer_list<double> terms) {
    double m = 0.0;
    for (double t : terms) {
        m = std::max(m, std::abs(t));
    }
    return m;
}

ResidualReport finish(EquationId id, int component, const BoundSolution& sol, const RadialGrid& grid,
                      const ResidualOptions& options, std::vector<double> residual,
                      const std::vector<double>& scale) {
    ResidualReport rep;
    rep.equation = id;
    rep.component = component;
    rep.state = sol.state;
    rep.method = options.oracle.method;
    rep.radii = grid.radii();
    rep.relative_norm = relative_norm(residual, scale, options.edge_fraction);
    rep.residual = std::move(residual);
    rep.tolerance = options.tolerance;
    rep.pass = std::isfinite(rep.relative_norm) && rep.relative_norm < options.tolerance;
    return rep;
}

void check_samples(std::size_t a, std::size_t b, const RadialGrid& grid) {
    if (a != grid.size() || b != grid.size()) {
        throw InvalidArgument("sample count does not match the grid");
    }
}

}  // namespace

std::vector<double> finite_difference(std::span<const double> values, const RadialGrid& grid, int order) {
    const std::size_t n = grid.size();
    if (n < 5) {
        throw InvalidArgument("finite_difference needs at least 5 grid points");
    }
    if (values.size() != n) {
        throw InvalidArgument("finite_difference: value count does not match the grid");
    }
    if (order != 1 && order != 2) {
        throw InvalidArgument("finite_difference: order must be 1 or 2");
    }
    const auto& r = grid.radii();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t start = std::clamp<std::size_t>(i < 2 ? 0 : i - 2, 0, n - 5);
        std::array<double, 5> x{};
        for (int k = 0; k < 5; ++k) {
            x[k] = r[start + k];
        }
        const auto w = stencil_weights(r[i], x);
        double sum = 0.0;
        for (int k = 0; k < 5; ++k) {
            sum += w[order][k] * values[start + k];
        }
        out[i] = sum;
    }
    return out;
}

std::string_view to_string(DerivativeMethod method) {
    return method == DerivativeMethod::analytic ? "analytic" : "central_difference";
}

std::string_view to_string(EquationId id) {
    switch (id) {
        case EquationId::conj_first_order_1:
            return "conj_first_order_1";
        case EquationId::conj_first_order_2:
            return "conj_first_order_2";
        case EquationId::second_order:
            return "second_order";
        case EquationId::phi_tilde_relation:
            return "phi_tilde_relation";
        case EquationId::dirac_radial_system:
            return "dirac_radial_system";
    }
    return "unknown";
}

void refresh_derivatives(std::vector<RadialJet>& jets, const RadialGrid& grid) {
    std::vector<double> v(jets.size());
    std::transform(jets.begin(), jets.end(), v.begin(), [](const RadialJet& j) { return j.value; });
    const auto d1 = finite_difference(v, grid, 1);
    const auto d2 = finite_difference(v, grid, 2);
    for (std::size_t i = 0; i < jets.size(); ++i) {
        jets[i].d1 = d1[i];
        jets[i].d2 = d2[i];
    }
}

ConjugateSamples sample_conjugate(const BoundSolution& sol, const RadialGrid& grid, DerivativeOracle oracle) {
    ConjugateSamples s;
    s.phi.reserve(grid.size());
    s.phi_tilde.reserve(grid.size());
    for (double r : grid.radii()) {
        s.phi.push_back(radial_phi_jet(sol, r));
        s.phi_tilde.push_back(radial_phi_tilde_jet(sol, r));
    }
    if (oracle.method == DerivativeMethod::central_difference) {
        refresh_derivatives(s.phi, grid);
        refresh_derivatives(s.phi_tilde, grid);
    }
    return s;
}

DiracSamples sample_dirac(const BoundSolution& sol, const RadialGrid& grid, DerivativeOracle oracle) {
    const double up = std::sqrt(1.0 + sol.energy.value);
    const double down = std::sqrt(1.0 - sol.energy.value);
    DiracSamples s;
    s.upper.reserve(grid.size());
    s.lower.reserve(grid.size());
    for (double r : grid.radii()) {
        const auto g = radial_phi_jet(sol, r);
        const auto gt = radial_phi_tilde_jet(sol, r);
        // psi = c (g +/- g~); d/dr (r psi) = psi + r psi'; d2/dr2 (r psi) = 2 psi' + r psi''.
        auto radial = [r](double c, double v, double d1, double d2) {
            return RadialJet{c * r * v, c * (v + r * d1), c * (2.0 * d1 + r * d2)};
        };
        s.upper.push_back(radial(up, g.value + gt.value, g.d1 + gt.d1, g.d2 + gt.d2));
        s.lower.push_back(radial(-down, g.value - gt.value, g.d1 - gt.d1, g.d2 - gt.d2));
    }
    if (oracle.method == DerivativeMethod::central_difference) {
        refresh_derivatives(s.upper, grid);
        refresh_derivatives(s.lower, grid);
    }
    return s;
}

double relative_norm(std::span<const double> residual, std::span<const double> term_scale, double edge_fraction) {
    if (residual.size() != term_scale.size()) {
        throw InvalidArgument("relative_norm: size mismatch");
    }
    const auto [lo, hi] = interior(residual.size(), edge_fraction);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        num = std::max(num, std::abs(residual[i]));
        den = std::max(den, std::abs(term_scale[i]));
    }
    if (den == 0.0) {
        return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return num / den;
}

std::pair<ResidualReport, ResidualReport> residual_conjugate_first_order(const BoundSolution& sol,
                                                                         const ConjugateSamples& samples,
                                                                         const RadialGrid& grid,
                                                                         const ResidualOptions& options) {
    check_samples(samples.phi.size(), samples.phi_tilde.size(), grid);
    const double alpha = sol.config.alpha();
    const double lambda = sol.energy.lambda;
    const double e = sol.energy.value;
    const double kappa = sol.state.kappa;
    const std::size_t n = grid.size();
    std::vector<double> res1(n), res2(n), scale1(n), scale2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid[i];
        const auto& g = samples.phi[i];
        const auto& gt = samples.phi_tilde[i];
        // [d/dr + lambda + E V/lambda + 1/r] g + [kappa/r + V/lambda] g~
        const std::array<double, 6> t1{g.d1,
                                       lambda * g.value,
                                       -e * alpha / (lambda * r) * g.value,
                                       g.value / r,
                                       kappa / r * gt.value,
                                       -alpha / (lambda * r) * gt.value};
        // [d/dr - lambda - E V/lambda + 1/r] g~ + [kappa/r - V/lambda] g
        const std::array<double, 6> t2{gt.d1,
                                       -lambda * gt.value,
                                       e * alpha / (lambda * r) * gt.value,
                                       gt.value / r,
                                       kappa / r * g.value,
                                       alpha / (lambda * r) * g.value};
        res1[i] = t1[0] + t1[1] + t1[2] + t1[3] + t1[4] + t1[5];
        res2[i] = t2[0] + t2[1] + t2[2] + t2[3] + t2[4] + t2[5];
        scale1[i] = max_abs({t1[0], t1[1], t1[2], t1[3], t1[4], t1[5]});
        scale2[i] = max_abs({t2[0], t2[1], t2[2], t2[3], t2[4], t2[5]});
    }
    return {finish(EquationId::conj_first_order_1, 1, sol, grid, options, std::move(res1), scale1),
            finish(EquationId::conj_first_order_2, 2, sol, grid, options, std::move(res2), scale2)};
}

std::pair<ResidualReport, ResidualReport> residual_conjugate_first_order(const BoundSolution& sol,
                                                                         const RadialGrid& grid,
                                                                         const ResidualOptions& options) {
    return residual_conjugate_first_order(sol, sample_conjugate(sol, grid, options.oracle), grid, options);
}

ResidualReport residual_second_order(const BoundSolution& sol, const ConjugateSamples& samples, const RadialGrid& grid,
                                     const ResidualOptions& options, bool include_gamma) {
    check_samples(samples.phi.size(), samples.phi_tilde.size(), grid);
    const double alpha = sol.config.alpha();
    const double lambda = sol.energy.lambda;
    const double e = sol.energy.value;
    const double ll = sol.state.l * (sol.state.l + 1.0);
    const double sigma_l = -(1.0 + sol.state.kappa);
    const double gamma_on = include_gamma ? 1.0 : 0.0;
    const std::size_t n = grid.size();
    std::vector<double> res(n), scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid[i];
        const auto& g = samples.phi[i];
        const double coulomb = e + alpha / r;
        const std::array<double, 8> t{-g.d2,
                                      -2.0 * g.d1 / r,
                                      ll * g.value / (r * r),
                                      g.value,
                                      -coulomb * coulomb * g.value,
                                      -gamma_on * lambda * g.value / r,
                                      -gamma_on * g.d1 / r,
                                      gamma_on * sigma_l * g.value / (r * r)};
        double sum = 0.0;
        double big = 0.0;
        for (double term : t) {
            sum += term;
            big = std::max(big, std::abs(term));
        }
        res[i] = sum;
        scale[i] = big;
    }
    return finish(EquationId::second_order, 0, sol, grid, options, std::move(res), scale);
}

ResidualReport residual_second_order(const BoundSolution& sol, const RadialGrid& grid, const ResidualOptions& options,
                                     bool include_gamma) {
    return residual_second_order(sol, sample_conjugate(sol, grid, options.oracle), grid, options, include_gamma);
}

ResidualReport residual_phi_tilde_relation(const BoundSolution& sol, const ConjugateSamples& samples,
                                           const RadialGrid& grid, const ResidualOptions& options) {
    check_samples(samples.phi.size(), samples.phi_tilde.size(), grid);
    const double alpha = sol.config.alpha();
    const double lambda = sol.energy.lambda;
    const double e = sol.energy.value;
    const double kappa = sol.state.kappa;
    const double lhs_coeff = (alpha - lambda * kappa) / lambda;
    const std::size_t n = grid.size();
    std::vector<double> res(n), scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid[i];
        const auto& g = samples.phi[i];
        const auto& gt = samples.phi_tilde[i];
        const std::array<double, 5> t{lhs_coeff * gt.value, -r * g.d1, -lambda * r * g.value,
                                      alpha * e / lambda * g.value, -g.value};
        res[i] = t[0] + t[1] + t[2] + t[3] + t[4];
        scale[i] = max_abs({t[0], t[1], t[2], t[3], t[4]});
    }
    return finish(EquationId::phi_tilde_relation, 0, sol, grid, options, std::move(res), scale);
}

ResidualReport residual_phi_tilde_relation(const BoundSolution& sol, const RadialGrid& grid,
                                           const ResidualOptions& options) {
    return residual_phi_tilde_relation(sol, sample_conjugate(sol, grid, options.oracle), grid, options);
}

std::pair<ResidualReport, ResidualReport> residual_dirac_radial_system(const BoundSolution& sol,
                                                                       const DiracSamples& samples,
                                                                       const RadialGrid& grid,
                                                                       const ResidualOptions& options) {
    check_samples(samples.upper.size(), samples.lower.size(), grid);
    const double alpha = sol.config.alpha();
    const double e = sol.energy.value;
    const double kappa = sol.state.kappa;
    const std::size_t n = grid.size();
    std::vector<double> res1(n), res2(n), scale1(n), scale2(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = grid[i];
        const auto& big_g = samples.upper[i];
        const auto& big_f = samples.lower[i];
        const double e_minus_v = e + alpha / r;
        const std::array<double, 3> t1{big_g.d1, kappa / r * big_g.value, -(e_minus_v + 1.0) * big_f.value};
        const std::array<double, 3> t2{big_f.d1, -kappa / r * big_f.value, (e_minus_v - 1.0) * big_g.value};
        res1[i] = t1[0] + t1[1] + t1[2];
        res2[i] = t2[0] + t2[1] + t2[2];
        scale1[i] = max_abs({t1[0], t1[1], t1[2]});
        scale2[i] = max_abs({t2[0], t2[1], t2[2]});
    }
    return {finish(EquationId::dirac_radial_system, 1, sol, grid, options, std::move(res1), scale1),
            finish(EquationId::dirac_radial_system, 2, sol, grid, options, std::move(res2), scale2)};
}

std::pair<ResidualReport, ResidualReport> residual_dirac_radial_system(const BoundSolution& sol,
                                                                       const RadialGrid& grid,
                                                                       const ResidualOptions& options) {
    return residual_dirac_radial_system(sol, sample_dirac(sol, grid, options.oracle), grid, options);
}

std::vector<ResidualReport> residual_suite(const BoundSolution& sol, const RadialGrid& grid,
                                           const ResidualOptions& options) {
    const auto conj = sample_conjugate(sol, grid, options.oracle);
    std::vector<ResidualReport> out;
    auto [c1, c2] = residual_conjugate_first_order(sol, conj, grid, options);
    out.push_back(std::move(c1));
    out.push_back(std::move(c2));
    out.push_back(residual_second_order(sol, conj, grid, options));
    out.push_back(residual_phi_tilde_relation(sol, conj, grid, options));
    auto [d1, d2] = residual_dirac_radial_system(sol, sample_dirac(sol, grid, options.oracle), grid, options);
    out.push_back(std::move(d1));
    out.push_back(std::move(d2));
    return out;
}

double round_trip_ulps(const BoundSolution& sol, const RadialGrid& grid) {
    double worst = 0.0;
    for (double r : grid.radii()) {
        const double g = radial_phi(sol, r);
        const double gt = radial_phi_tilde(sol, r);
        const auto psi = bispinor_from_conjugate(g, gt, sol.energy);
        const auto back = conjugate_transform(psi.psi_a, psi.psi_b, sol.energy);
        const double scale = std::max(std::abs(g), std::abs(gt));
        if (scale == 0.0) {
            continue;
        }
        const double ulp = std::nextafter(scale, std::numeric_limits<double>::infinity()) - scale;
        const double err = std::max(std::abs(back.phi - g), std::abs(back.phi_tilde - gt));
        worst = std::max(worst, err / ulp);
    }
    return worst;
}

}  // namespace conjdirac
