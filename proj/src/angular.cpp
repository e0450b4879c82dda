#include "conjdirac/angular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "conjdirac/quadrature.hpp"

namespace conjdirac {

namespace {

// Normalized associated Legendre function including the 1/sqrt(4 pi) factor
// and the Condon-Shortley phase, for m >= 0.
double normalized_legendre(int l, int m, double x) {
    const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
    double pmm = 1.0 / (4.0 * std::numbers::pi);
    double prod = 1.0;
    for (int k = 1; k <= m; ++k) {
        prod *= (2.0 * k - 1.0) / (2.0 * k);
    }
    pmm = std::sqrt((2.0 * m + 1.0) * pmm * prod);
    pmm *= std::pow(-s, m);
    if (l == m) {
        return pmm;
    }
    double pm1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
    if (l == m + 1) {
        return pm1;
    }
    double prev = pmm;
    double cur = pm1;
    double a_prev = std::sqrt(2.0 * m + 3.0);
    for (int k = m + 2; k <= l; ++k) {
        const double a = std::sqrt((4.0 * k * k - 1.0) / (static_cast<double>(k) * k - static_cast<double>(m) * m));
        const double next = a * (x * cur - prev / a_prev);
        prev = cur;
        cur = next;
        a_prev = a;
    }
    return cur;
}

void validate_kappa_mj(int kappa, HalfInteger m_j) {
    if (kappa == 0) {
        throw InvalidArgument("kappa must be nonzero");
    }
    const int two_j = 2 * std::abs(kappa) - 1;
    if (m_j.twice % 2 == 0 || std::abs(m_j.twice) > two_j) {
        throw InvalidArgument("invalid m_j for kappa " + std::to_string(kappa));
    }
}

}  // namespace

Complex spherical_harmonic(int l, int m, double theta, double phi) {
    if (l < 0 || l > kMaxHarmonicDegree) {
        throw InvalidArgument("spherical_harmonic: l out of supported range [0, 25]");
    }
    if (std::abs(m) > l) {
        throw InvalidArgument("spherical_harmonic: |m| > l");
    }
    const int am = std::abs(m);
    const double p = normalized_legendre(l, am, std::cos(theta));
    const Complex y = p * std::polar(1.0, am * phi);
    if (m >= 0) {
        return y;
    }
    return (am % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

double cg_coefficient(int l, HalfInteger j, HalfInteger m_j, HalfInteger m_s) {
    if (l < 0 || (j.twice != 2 * l + 1 && j.twice != 2 * l - 1) || j.twice < 1) {
        throw InvalidArgument("cg_coefficient: j must equal l +/- 1/2");
    }
    if (m_j.twice % 2 == 0 || std::abs(m_j.twice) > j.twice) {
        throw InvalidArgument("cg_coefficient: |m_j| must not exceed j");
    }
    if (m_s.twice != 1 && m_s.twice != -1) {
        throw InvalidArgument("cg_coefficient: m_s must be +/- 1/2");
    }
    const double denom = 2.0 * (2 * l + 1);
    const double plus = (2 * l + 1 + m_j.twice) / denom;   // (l + m_j + 1/2)/(2l+1)
    const double minus = (2 * l + 1 - m_j.twice) / denom;  // (l - m_j + 1/2)/(2l+1)
    const bool up = m_s.twice == 1;
    if (j.twice == 2 * l + 1) {
        return std::sqrt(up ? plus : minus);
    }
    return up ? -std::sqrt(minus) : std::sqrt(plus);
}

int orbital_l(int kappa) {
    if (kappa == 0) {
        throw InvalidArgument("kappa must be nonzero");
    }
    return kappa > 0 ? kappa : -kappa - 1;
}

SphericalSpinor::SphericalSpinor(int kappa, HalfInteger m_j)
    : kappa_(kappa), m_j_(m_j), l_(0), j_{1}, weights_{0.0, 0.0} {
    validate_kappa_mj(kappa, m_j);
    l_ = orbital_l(kappa);
    j_ = HalfInteger{2 * std::abs(kappa) - 1};
    weights_[0] = cg_coefficient(l_, j_, m_j_, HalfInteger{1});
    weights_[1] = cg_coefficient(l_, j_, m_j_, HalfInteger{-1});
}

Spinor2 SphericalSpinor::operator()(double theta, double phi) const {
    const int m_up = (m_j_.twice - 1) / 2;
    const int m_down = (m_j_.twice + 1) / 2;
    Spinor2 out{Complex{0.0}, Complex{0.0}};
    if (weights_[0] != 0.0) {
        out[0] = weights_[0] * spherical_harmonic(l_, m_up, theta, phi);
    }
    if (weights_[1] != 0.0) {
        out[1] = weights_[1] * spherical_harmonic(l_, m_down, theta, phi);
    }
    return out;
}

Spinor2 spherical_spinor(int kappa, HalfInteger m_j, double theta, double phi) {
    return SphericalSpinor(kappa, m_j)(theta, phi);
}

Spinor2 apply_sigma_dot_rhat(const Spinor2& value, double theta, double phi) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex e_minus = std::polar(s, -phi);
    const Complex e_plus = std::polar(s, phi);
    return Spinor2{c * value[0] + e_minus * value[1], e_plus * value[0] - c * value[1]};
}

double sigma_dot_L_eigenvalue(int kappa) {
    if (kappa == 0) {
        throw InvalidArgument("kappa must be nonzero");
    }
    return -(1.0 + kappa);
}

double k_operator_eigenvalue(int kappa) {
    return -1.0 - sigma_dot_L_eigenvalue(kappa);
}

std::vector<AngularOperatorResult> check_operator_eigenvalues(int kappa, HalfInteger m_j, double tolerance) {
    const SphericalSpinor spinor(kappa, m_j);
    const double l = spinor.l();
    const double j = spinor.j().value();
    const double m_up = 0.5 * (m_j.twice - 1);
    const double m_down = 0.5 * (m_j.twice + 1);
    const double cu = spinor.weights()[0];
    const double cd = spinor.weights()[1];
    const double ll = l * (l + 1.0);

    // sigma.L = sigma_z L_z + sigma^+ L_- + sigma^- L_+ in the (up, down) basis.
    const double lower_to_upper = std::sqrt(std::max(0.0, ll - m_down * (m_down - 1.0)));
    const double upper_to_lower = std::sqrt(std::max(0.0, ll - m_up * (m_up + 1.0)));
    const double sl_u = m_up * cu + lower_to_upper * cd;
    const double sl_d = -m_down * cd + upper_to_lower * cu;

    auto make = [&](std::string name, double expected, double ou, double od) {
        AngularOperatorResult r;
        r.operator_name = std::move(name);
        r.expected = expected;
        r.measured = cu * ou + cd * od;  // Rayleigh quotient, |c| = 1
        r.residual = std::hypot(ou - expected * cu, od - expected * cd);
        r.tolerance = tolerance;
        r.pass = r.residual <= tolerance;
        return r;
    };

    std::vector<AngularOperatorResult> out;
    out.push_back(make("L2", ll, ll * cu, ll * cd));
    out.push_back(make("Jz", m_j.value(), (m_up + 0.5) * cu, (m_down - 0.5) * cd));
    out.push_back(make("J2", j * (j + 1.0), (ll + 0.75) * cu + sl_u, (ll + 0.75) * cd + sl_d));
    out.push_back(make("sigma.L", sigma_dot_L_eigenvalue(kappa), sl_u, sl_d));
    out.push_back(make("K", static_cast<double>(kappa), -cu - sl_u, -cd - sl_d));
    return out;
}

double parity_relation_residual(int kappa, HalfInteger m_j, int n_theta, int n_phi) {
    const SphericalSpinor y(kappa, m_j);
    const SphericalSpinor y_flip(-kappa, m_j);
    double worst = 0.0;
    for (int it = 0; it < n_theta; ++it) {
        const double theta = std::numbers::pi * (it + 0.5) / n_theta;
        for (int ip = 0; ip < n_phi; ++ip) {
            const double phi = 2.0 * std::numbers::pi * ip / n_phi;
            const Spinor2 lhs = apply_sigma_dot_rhat(y(theta, phi), theta, phi);
            const Spinor2 rhs = y_flip(theta, phi);
            worst = std::max({worst, std::abs(lhs[0] + rhs[0]), std::abs(lhs[1] + rhs[1])});
        }
    }
    return worst;
}

Complex spinor_overlap(int kappa1, HalfInteger m1, int kappa2, HalfInteger m2, int n_theta, int n_phi) {
    const SphericalSpinor a(kappa1, m1);
    const SphericalSpinor b(kappa2, m2);
    const auto rule = GaussLegendreRule::make(n_theta);
    const double dphi = 2.0 * std::numbers::pi / n_phi;
    Complex sum{0.0};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double theta = std::acos(rule.nodes[i]);
        Complex ring{0.0};
        for (int ip = 0; ip < n_phi; ++ip) {
            const double phi = dphi * ip;
            const Spinor2 va = a(theta, phi);
            const Spinor2 vb = b(theta, phi);
            ring += std::conj(va[0]) * vb[0] + std::conj(va[1]) * vb[1];
        }
        sum += rule.weights[i] * ring * dphi;
    }
    return sum;
}

}  // namespace conjdirac
