#include "doctest.h"

#include <cmath>
#include <cstring>

#include "conjdirac/spectrum.hpp"

using namespace conjdirac;

namespace {

// Extended-precision evaluation of the spectrum formula as printed.
long double energy_oracle(int n, int kappa, double alpha) {
    const long double a = alpha;
    const long double k = kappa;
    const long double gamma = std::sqrt(k * k - a * a);
    const long double nr = n - std::abs(kappa);
    const long double x = a / (nr + gamma);
    return 1.0L / std::sqrt(1.0L + x * x);
}

bool bit_equal(double a, double b) {
    return std::memcmp(&a, &b, sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("ground-state energy is sqrt(1 - alpha^2)") {
    const PhysicsConfig cfg;
    const auto e = energy(make_state(1, -1, 0.5, cfg), cfg);
    const double a = kAlphaCodata;
    // 30-digit reference: sqrt(1 - alpha^2) = 0.999973373968266882417856517472
    CHECK(std::abs(e.value - 0.999973373968266882) <= 1e-12 * e.value);
    CHECK(std::abs(e.value - std::sqrt((1.0 - a) * (1.0 + a))) <= 1e-15);
    CHECK(e.lambda == doctest::Approx(a).epsilon(1e-15));
    const auto ev = convert_energy(e, cfg);
    CHECK(std::abs(ev.binding - 13.6057) <= 5e-4);
}

TEST_CASE("energy matches extended-precision formula for n <= 10") {
    for (double alpha : {1e-5, kAlphaCodata, 0.1, 0.6}) {
        const PhysicsConfig cfg(alpha);
        for (const auto& s : enumerate_states(10, cfg)) {
            const auto e = energy(s, cfg);
            const long double ref = energy_oracle(s.n, s.kappa, alpha);
            CHECK(std::abs(static_cast<long double>(e.value) - ref) <= 2e-16L);
            // Binding energy 1 - E keeps its relative accuracy as well.
            CHECK(std::abs((1.0L - e.value) - (1.0L - ref)) <= 4e-16L);
        }
    }
}

TEST_CASE("alpha -> 0 gives E -> 1") {
    const PhysicsConfig zero(0.0);
    for (const auto& s : enumerate_states(4, zero)) {
        CHECK(energy(s, zero).value == 1.0);
        CHECK(energy(s, zero).lambda == 0.0);
    }
    const PhysicsConfig tiny(1e-9);
    CHECK(energy(make_state(3, -2, 0.5, tiny), tiny).value == doctest::Approx(1.0).epsilon(1e-16));
}

TEST_CASE("degeneracy in |kappa| is bit-exact") {
    for (double alpha : {kAlphaCodata, 0.05, 0.3}) {
        const PhysicsConfig cfg(alpha);
        for (int n = 2; n <= 10; ++n) {
            for (int k = 1; k < n; ++k) {
                const auto plus = energy(make_state(n, k, 0.5, cfg), cfg);
                const auto minus = energy(make_state(n, -k, 0.5, cfg), cfg);
                CHECK(bit_equal(plus.value, minus.value));
                CHECK(bit_equal(plus.lambda, minus.lambda));
            }
        }
    }
}

TEST_CASE("energy is monotone in n and |kappa|") {
    const PhysicsConfig cfg;
    for (int k = 1; k <= 9; ++k) {
        double prev = 0.0;
        for (int n = k; n <= 10; ++n) {
            const double e = energy(make_state(n, -k, 0.5, cfg), cfg).value;
            CHECK(e > prev);
            prev = e;
        }
    }
    for (int n = 2; n <= 10; ++n) {
        double prev = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double e = energy(make_state(n, -k, 0.5, cfg), cfg).value;
            CHECK(e > prev);
            prev = e;
        }
    }
}

TEST_CASE("quantization_a examples and closure for n <= 10") {
    const PhysicsConfig cfg;
    auto a_of = [&](int n, int kappa) {
        const auto s = make_state(n, kappa, 0.5, cfg);
        return quantization_a(s, energy(s, cfg), cfg);
    };
    CHECK(std::abs(a_of(1, -1)) <= 1e-12);
    CHECK(std::abs(a_of(2, -1) + 1.0) <= 1e-12);
    CHECK(std::abs(a_of(3, 2) + 1.0) <= 1e-12);
    for (double alpha : {kAlphaCodata, 0.2}) {
        const PhysicsConfig c(alpha);
        for (const auto& s : enumerate_states(10, c)) {
            CHECK(std::abs(quantization_a(s, energy(s, c), c) + s.n_r) <= 1e-12);
        }
    }
    const auto s = make_state(1, -1, 0.5, cfg);
    CHECK_THROWS_AS(quantization_a(s, EnergyValue::from_value(1.0), cfg), InvalidArgument);
}

TEST_CASE("fine_structure_splitting examples") {
    const PhysicsConfig cfg;
    const double split = fine_structure_splitting(2, -2, 1, cfg);
    CHECK(split == doctest::Approx(4.533e-5).epsilon(1e-3));
    const double leading = kElectronRestEnergyEv * std::pow(kAlphaCodata, 4) / 32.0;
    CHECK(std::abs(split - leading) <= 0.02 * leading);
    CHECK(fine_structure_splitting(2, -1, 1, cfg) == 0.0);
    CHECK(fine_structure_splitting(3, -3, 2, cfg) > 0.0);
    CHECK_THROWS_AS(fine_structure_splitting(2, -3, 1, cfg), InvalidArgument);
}

TEST_CASE("sommerfeld_expansion examples and agreement for n <= 5") {
    const PhysicsConfig cfg;
    const double a = kAlphaCodata;
    const double a2 = a * a;
    CHECK(sommerfeld_expansion(1, HalfInteger{1}, cfg) == doctest::Approx(1.0 - a2 / 2.0 - a2 * a2 / 8.0).epsilon(1e-16));
    CHECK(sommerfeld_expansion(4, HalfInteger{5}, PhysicsConfig(0.0)) == 1.0);
    const double a6 = std::pow(a, 6);
    double worst = 0.0;
    for (const auto& s : enumerate_states(5, cfg)) {
        const double diff = std::abs(energy(s, cfg).value - sommerfeld_expansion(s.n, s.j, cfg));
        worst = std::max(worst, diff / a6);
        CHECK(diff < 5.0 * a6);
    }
    MESSAGE("worst expansion gap: " << worst << " alpha^6");
}

TEST_CASE("enumerate_states and spectrum_table") {
    const PhysicsConfig cfg;
    CHECK(enumerate_states(1, cfg).size() == 1);
    CHECK(enumerate_states(2, cfg).size() == 4);
    CHECK(enumerate_states(3, cfg).size() == 9);
    CHECK_THROWS_AS(enumerate_states(0, cfg), InvalidArgument);

    const auto rows = spectrum_table(2, cfg);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].label == "1s1/2");
    CHECK(rows[1].label == "2s1/2");
    CHECK(rows[2].label == "2p1/2");
    CHECK(rows[3].label == "2p3/2");
    CHECK(bit_equal(rows[1].e_over_mc2, rows[2].e_over_mc2));
    for (const auto& r : spectrum_table(6, cfg)) {
        CHECK(r.e_over_mc2 > 0.0);
        CHECK(r.e_over_mc2 < 1.0);
        CHECK(r.lambda == doctest::Approx(std::sqrt(1.0 - r.e_over_mc2 * r.e_over_mc2)).epsilon(1e-9));
        CHECK(r.binding_ev == doctest::Approx((1.0 - r.e_over_mc2) * kElectronRestEnergyEv).epsilon(1e-9));
        CHECK(r.label.front() - '0' == r.n);
    }
}
