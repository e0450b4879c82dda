#include "doctest.h"

#include <cmath>
#include <vector>

#include "conjdirac/spectrum.hpp"
#include "conjdirac/verify.hpp"

using namespace conjdirac;

namespace {

ResidualOptions analytic_opts(double edge = 0.02) {
    ResidualOptions o;
    o.oracle.method = DerivativeMethod::analytic;
    o.edge_fraction = edge;
    return o;
}

ResidualOptions fd_opts(double edge = 0.02) {
    ResidualOptions o;
    o.oracle.method = DerivativeMethod::central_difference;
    o.tolerance = 1e-6;
    o.edge_fraction = edge;
    return o;
}

// f(r) (1 + eps alpha r) with exact derivatives.
void perturb(std::vector<RadialJet>& jets, const RadialGrid& grid, double eps_alpha) {
    for (std::size_t i = 0; i < jets.size(); ++i) {
        const double r = grid[i];
        const double p = 1.0 + eps_alpha * r;
        const RadialJet f = jets[i];
        jets[i] = RadialJet{f.value * p, f.d1 * p + f.value * eps_alpha, f.d2 * p + 2.0 * f.d1 * eps_alpha};
    }
}

void scale_jets(std::vector<RadialJet>& jets, double c) {
    for (auto& j : jets) {
        j = RadialJet{c * j.value, c * j.d1, c * j.d2};
    }
}

std::vector<double> max_norms(const std::vector<ResidualReport>& reports) {
    std::vector<double> out;
    for (const auto& r : reports) {
        out.push_back(r.relative_norm);
    }
    return out;
}

}  // namespace

TEST_CASE("finite_difference examples") {
    const auto grid = RadialGrid::linear(0.5, 3.0, 51);
    std::vector<double> sq(grid.size());
    std::vector<double> one(grid.size(), 7.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        sq[i] = grid[i] * grid[i];
    }
    const auto d1 = finite_difference(sq, grid, 1);
    const auto d2 = finite_difference(sq, grid, 2);
    const auto dc = finite_difference(one, grid, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(d1[i] - 2.0 * grid[i]) < 1e-10);
        CHECK(std::abs(d2[i] - 2.0) < 1e-9);
        CHECK(std::abs(dc[i]) < 1e-12);
    }
    const auto small = RadialGrid::linear(1.0, 2.0, 4);
    CHECK_THROWS_AS(finite_difference(std::vector<double>(4, 1.0), small, 1), InvalidArgument);
    CHECK_THROWS_AS(finite_difference(sq, grid, 3), InvalidArgument);
    CHECK_THROWS_AS(finite_difference(std::vector<double>(3, 1.0), grid, 1), InvalidArgument);
}

TEST_CASE("finite_difference converges at fourth order under step halving") {
    const double lambda = 0.7;
    auto worst_error = [&](const RadialGrid& grid) {
        std::vector<double> v(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            v[i] = std::exp(-lambda * grid[i]);
        }
        const auto d = finite_difference(v, grid, 1);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            worst = std::max(worst, std::abs(d[i] + lambda * v[i]));
        }
        return worst;
    };
    for (bool log_grid : {false, true}) {
        std::vector<double> errors;
        for (int points : {41, 81, 161}) {
            errors.push_back(worst_error(log_grid ? RadialGrid::log_spaced(0.2, 8.0, points)
                                                  : RadialGrid::linear(0.2, 8.0, points)));
        }
        INFO("log grid " << log_grid << " errors " << errors[0] << " " << errors[1] << " " << errors[2]);
        CHECK(errors[0] / errors[1] >= 12.0);
        CHECK(errors[1] / errors[2] >= 12.0);
    }
}

TEST_CASE("finite-difference and analytic derivative paths agree at fourth order") {
    const PhysicsConfig cfg;
    for (auto [n, kappa] : {std::pair{2, -1}, std::pair{3, 2}, std::pair{4, -3}}) {
        const auto sol = BoundSolution::make(n, kappa, HalfInteger{1}, cfg);
        const auto base = RadialGrid::default_for(sol.state, cfg);
        std::vector<double> errors;
        for (int points : {501, 1001, 2001}) {
            const auto grid = RadialGrid::log_spaced(base.front(), base.back(), points);
            const auto analytic = sample_conjugate(sol, grid, DerivativeOracle{DerivativeMethod::analytic});
            const auto fd = sample_conjugate(sol, grid, DerivativeOracle{DerivativeMethod::central_difference});
            const auto [lo, hi] = std::pair{grid.size() / 50, grid.size() - grid.size() / 50};
            double worst = 0.0;
            double scale = 0.0;
            for (std::size_t i = lo; i < hi; ++i) {
                worst = std::max(worst, std::abs(fd.phi[i].d1 - analytic.phi[i].d1));
                scale = std::max(scale, std::abs(analytic.phi[i].d1));
            }
            errors.push_back(worst / scale);
        }
        INFO(sol.state.label() << " errors " << errors[0] << " " << errors[1] << " " << errors[2]);
        CHECK(errors[0] / errors[1] >= 12.0);
        CHECK(errors[1] / errors[2] >= 12.0);
    }
}

TEST_CASE("relative_norm") {
    const std::vector<double> res{100.0, 1.0, 2.0, 1.0, 100.0};
    const std::vector<double> scale{1.0, 10.0, 10.0, 20.0, 1.0};
    CHECK(relative_norm(res, scale, 0.0) == 100.0 / 20.0);
    CHECK(relative_norm(res, scale, 0.2) == 2.0 / 20.0);
    CHECK(relative_norm(std::vector<double>{0.0}, std::vector<double>{0.0}, 0.0) == 0.0);
    CHECK(std::isinf(relative_norm(std::vector<double>{1.0}, std::vector<double>{0.0}, 0.0)));
    CHECK_THROWS_AS(relative_norm(res, std::vector<double>{1.0}, 0.0), InvalidArgument);
}

TEST_CASE("per-equation examples") {
    const PhysicsConfig cfg;
    const double a = kAlphaCodata;
    const auto g1 = BoundSolution::make(1, -1, HalfInteger{1}, cfg);
    const auto narrow = RadialGrid::log_spaced(1e-2 / a, 30.0 / a, 2000);
    const auto opts = analytic_opts(0.0);

    const auto [c1, c2] = residual_conjugate_first_order(g1, narrow, opts);
    CHECK(c1.relative_norm < 1e-9);
    CHECK(c2.relative_norm < 1e-9);
    CHECK(c1.equation == EquationId::conj_first_order_1);
    CHECK(c2.component == 2);
    CHECK(c1.residual.size() == narrow.size());

    const auto s32 = BoundSolution::make(3, 2, HalfInteger{1}, cfg);
    const auto grid32 = RadialGrid::default_for(s32.state, cfg);
    const auto [p1, p2] = residual_conjugate_first_order(s32, grid32, opts);
    CHECK(p1.relative_norm < 1e-8);
    CHECK(p2.relative_norm < 1e-8);

    CHECK(residual_second_order(g1, narrow, opts).relative_norm < 1e-9);
    const auto s22 = BoundSolution::make(2, -2, HalfInteger{1}, cfg);
    CHECK(residual_second_order(s22, RadialGrid::default_for(s22.state, cfg), opts).relative_norm < 1e-8);

    CHECK(residual_phi_tilde_relation(g1, narrow, opts).relative_norm < 1e-9);
    const auto s21 = BoundSolution::make(2, -1, HalfInteger{1}, cfg);
    const RadialGrid bohr({1.0 / a});
    CHECK(residual_phi_tilde_relation(s21, bohr, opts).relative_norm < 1e-9);

    CHECK(to_string(EquationId::phi_tilde_relation) == "phi_tilde_relation");
    CHECK(to_string(DerivativeMethod::central_difference) == "central_difference");
}

TEST_CASE("every residual family passes for n <= 4 with both derivative paths") {
    const PhysicsConfig cfg;
    double worst_analytic = 0.0;
    double worst_fd = 0.0;
    for (const auto& state : enumerate_states(4, cfg)) {
        const auto sol = BoundSolution::make(state, cfg);
        const auto grid = RadialGrid::default_for(state, cfg);
        for (const auto& rep : residual_suite(sol, grid, analytic_opts())) {
            INFO(state.label() << " " << to_string(rep.equation) << " " << rep.component);
            CHECK(rep.pass);
            CHECK(rep.relative_norm < 1e-8);
            worst_analytic = std::max(worst_analytic, rep.relative_norm);
        }
        for (const auto& rep : residual_suite(sol, grid, fd_opts())) {
            INFO(state.label() << " " << to_string(rep.equation) << " " << rep.component);
            CHECK(rep.pass);
            CHECK(rep.relative_norm < 1e-6);
            worst_fd = std::max(worst_fd, rep.relative_norm);
        }
    }
    MESSAGE("worst analytic " << worst_analytic << ", worst finite difference " << worst_fd);
}

TEST_CASE("relative norms are scale invariant") {
    const PhysicsConfig cfg;
    const auto sol = BoundSolution::make(3, -2, HalfInteger{1}, cfg);
    const auto grid = RadialGrid::default_for(sol.state, cfg);
    const auto opts = analytic_opts();
    auto conj = sample_conjugate(sol, grid, opts.oracle);
    perturb(conj.phi, grid, 0.01 * kAlphaCodata);
    auto ten = conj;
    scale_jets(ten.phi, 10.0);
    scale_jets(ten.phi_tilde, 10.0);

    const auto [a1, a2] = residual_conjugate_first_order(sol, conj, grid, opts);
    const auto [b1, b2] = residual_conjugate_first_order(sol, ten, grid, opts);
    CHECK(b1.relative_norm == doctest::Approx(a1.relative_norm).epsilon(1e-12));
    CHECK(b2.relative_norm == doctest::Approx(a2.relative_norm).epsilon(1e-12));
    CHECK(residual_second_order(sol, ten, grid, opts).relative_norm ==
          doctest::Approx(residual_second_order(sol, conj, grid, opts).relative_norm).epsilon(1e-12));
    CHECK(residual_phi_tilde_relation(sol, ten, grid, opts).relative_norm ==
          doctest::Approx(residual_phi_tilde_relation(sol, conj, grid, opts).relative_norm).epsilon(1e-12));

    // Exact power-of-two scaling leaves even noise-level norms bit-identical.
    auto clean = sample_conjugate(sol, grid, opts.oracle);
    auto eight = clean;
    scale_jets(eight.phi, 8.0);
    scale_jets(eight.phi_tilde, 8.0);
    CHECK(residual_phi_tilde_relation(sol, eight, grid, opts).relative_norm ==
          residual_phi_tilde_relation(sol, clean, grid, opts).relative_norm);
}

TEST_CASE("residuals have power against a 1% perturbation") {
    const PhysicsConfig cfg;
    const double eps_alpha = 0.01 * kAlphaCodata;
    double smallest_gain = 1e300;
    double largest_perturbed = 0.0;
    for (auto [n, kappa] : {std::pair{1, -1}, std::pair{2, 1}, std::pair{3, -2}, std::pair{4, 3}}) {
        const auto sol = BoundSolution::make(n, kappa, HalfInteger{1}, cfg);
        const auto grid = RadialGrid::default_for(sol.state, cfg);
        const auto opts = analytic_opts();

        const auto clean = sample_conjugate(sol, grid, opts.oracle);
        auto bad = clean;
        perturb(bad.phi, grid, eps_alpha);
        // For 1s the second conjugate equation does not involve g at all
        // (kappa + alpha/lambda = 0), so Phi~ must be perturbed as well.
        for (std::size_t i = 0; i < grid.size(); ++i) {
            bad.phi_tilde[i].value += 0.01 * clean.phi[i].value;
            bad.phi_tilde[i].d1 += 0.01 * clean.phi[i].d1;
            bad.phi_tilde[i].d2 += 0.01 * clean.phi[i].d2;
        }
        const auto [c1, c2] = residual_conjugate_first_order(sol, clean, grid, opts);
        const auto [b1, b2] = residual_conjugate_first_order(sol, bad, grid, opts);
        const std::vector<std::pair<double, double>> pairs{
            {c1.relative_norm, b1.relative_norm},
            {c2.relative_norm, b2.relative_norm},
            {residual_second_order(sol, clean, grid, opts).relative_norm,
             residual_second_order(sol, bad, grid, opts).relative_norm},
            {residual_phi_tilde_relation(sol, clean, grid, opts).relative_norm,
             residual_phi_tilde_relation(sol, bad, grid, opts).relative_norm},
        };

        const auto dirac = sample_dirac(sol, grid, opts.oracle);
        auto dirac_bad = dirac;
        perturb(dirac_bad.upper, grid, eps_alpha);
        const auto [d1, d2] = residual_dirac_radial_system(sol, dirac, grid, opts);
        const auto [e1, e2] = residual_dirac_radial_system(sol, dirac_bad, grid, opts);

        auto all = pairs;
        all.emplace_back(d1.relative_norm, e1.relative_norm);
        all.emplace_back(d2.relative_norm, e2.relative_norm);
        for (const auto& [clean_norm, bad_norm] : all) {
            const double gain = bad_norm / std::max(clean_norm, 1e-300);
            smallest_gain = std::min(smallest_gain, gain);
            largest_perturbed = std::max(largest_perturbed, bad_norm);
            CHECK(gain >= 1e3);
        }
    }
    MESSAGE("smallest perturbation gain " << smallest_gain << ", largest perturbed norm " << largest_perturbed);
}

TEST_CASE("dropping Gamma breaks the second-order equation for 1s") {
    const PhysicsConfig cfg;
    const auto g1 = BoundSolution::make(1, -1, HalfInteger{1}, cfg);
    const auto grid = RadialGrid::default_for(g1.state, cfg);
    const auto full = analytic_opts(0.0);
    const double with_gamma = residual_second_order(g1, grid, full, true).relative_norm;
    const double without = residual_second_order(g1, grid, full, false).relative_norm;
    MESSAGE("second order with Gamma " << with_gamma << ", without " << without);
    CHECK(with_gamma < 1e-12);
    CHECK(without > 1e-3);
    // The size of the spin term varies by state (for n_r = 0, kappa < 0 it reduces to
    // (gamma - |kappa|) g/r^2 = O(alpha^2)), but it always sits far above the noise.
    for (const auto& state : enumerate_states(3, cfg)) {
        const auto sol = BoundSolution::make(state, cfg);
        const auto grid_s = RadialGrid::default_for(state, cfg);
        const double on = residual_second_order(sol, grid_s, analytic_opts(), true).relative_norm;
        const double off = residual_second_order(sol, grid_s, analytic_opts(), false).relative_norm;
        INFO(state.label() << " with " << on << " without " << off);
        CHECK(off >= 1e3 * on);
    }
}

TEST_CASE("flipping kappa in the first Dirac equation is detected") {
    const PhysicsConfig cfg;
    for (auto [n, kappa] : {std::pair{1, -1}, std::pair{2, 1}, std::pair{3, -2}}) {
        const auto sol = BoundSolution::make(n, kappa, HalfInteger{1}, cfg);
        const auto grid = RadialGrid::default_for(sol.state, cfg);
        const auto s = sample_dirac(sol, grid, DerivativeOracle{});
        std::vector<double> res(grid.size());
        std::vector<double> scale(grid.size());
        const double e = sol.energy.value;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double r = grid[i];
            const double t0 = s.upper[i].d1;
            const double t1 = -kappa / r * s.upper[i].value;
            const double t2 = -(e + kAlphaCodata / r + 1.0) * s.lower[i].value;
            res[i] = t0 + t1 + t2;
            scale[i] = std::max({std::abs(t0), std::abs(t1), std::abs(t2)});
        }
        const double flipped = relative_norm(res, scale, 0.02);
        INFO(sol.state.label() << " flipped norm " << flipped);
        CHECK(flipped > 1e-3);
    }
}

TEST_CASE("ground-state F/G ratio is constant") {
    const PhysicsConfig cfg;
    const auto g1 = BoundSolution::make(1, -1, HalfInteger{1}, cfg);
    const auto grid = RadialGrid::default_for(g1.state, cfg);
    const auto s = sample_dirac(g1, grid, DerivativeOracle{});
    const double e = g1.energy.value;
    const double expected = -std::sqrt((1.0 - e) / (1.0 + e));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(s.lower[i].value / s.upper[i].value == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("consistency chain: Dirac system, round trip and conjugate system all pass") {
    const PhysicsConfig cfg;
    for (const auto& state : enumerate_states(4, cfg)) {
        const auto sol = BoundSolution::make(state, cfg);
        const auto grid = RadialGrid::default_for(state, cfg);
        const auto opts = analytic_opts();
        const auto [d1, d2] = residual_dirac_radial_system(sol, grid, opts);
        const auto [c1, c2] = residual_conjugate_first_order(sol, grid, opts);
        const double ulps = round_trip_ulps(sol, grid);
        INFO(state.label());
        const bool dirac = d1.pass && d2.pass;
        const bool round_trip = ulps <= 8.0;
        const bool conjugate = c1.pass && c2.pass;
        CHECK(dirac);
        CHECK(round_trip);
        CHECK(conjugate);
        CHECK((!(dirac && round_trip) || conjugate));
    }
}

TEST_CASE("sample validation") {
    const PhysicsConfig cfg;
    const auto sol = BoundSolution::make(1, -1, HalfInteger{1}, cfg);
    const auto grid = RadialGrid::default_for(sol.state, cfg);
    ConjugateSamples empty;
    CHECK_THROWS_AS(residual_second_order(sol, empty, grid, analytic_opts()), InvalidArgument);
    CHECK(max_norms(residual_suite(sol, grid, analytic_opts())).size() == 6);
}
