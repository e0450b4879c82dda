#include "conjdirac/specfun.hpp"

#include <cmath>
#include <string>

namespace conjdirac {

KummerConvergenceError::KummerConvergenceError(double partial_sum, int terms)
    : NumericalError("Kummer series did not converge after " + std::to_string(terms) +
                     " terms (partial sum " + std::to_string(partial_sum) + ")"),
      partial_sum_(partial_sum),
      terms_(terms) {}

std::optional<int> nonpositive_integer_degree(double a) {
    if (a > 0.5) {
        return std::nullopt;
    }
    const double degree = std::round(-a);
    if (std::abs(a + degree) < 1e-12 * (1.0 + std::abs(a))) {
        return static_cast<int>(degree);
    }
    return std::nullopt;
}

KummerParams KummerParams::make(double a, double b) {
    return KummerParams{a, b, nonpositive_integer_degree(a)};
}

double pochhammer(double a, int n) {
    if (n < 0) {
        throw InvalidArgument("pochhammer: n must be nonnegative");
    }
    double result = 1.0;
    for (int k = 0; k < n; ++k) {
        result *= a + k;
        if (result == 0.0) {
            return 0.0;
        }
    }
    return result;
}

double kummer_m(const KummerParams& p, double rho, double tol) {
    if (!(p.b > 0.0)) {
        throw InvalidArgument("kummer_m: b must be positive");
    }
    if (!(rho >= 0.0)) {
        throw InvalidArgument("kummer_m: rho must be nonnegative");
    }
    if (!(tol > 0.0)) {
        throw InvalidArgument("kummer_m: tol must be positive");
    }

    double term = 1.0;
    double sum = 1.0;
    if (p.polynomial_degree) {
        const int degree = *p.polynomial_degree;
        const double a = -static_cast<double>(degree);
        for (int k = 0; k < degree; ++k) {
            term *= (a + k) * rho / ((p.b + k) * (k + 1));
            sum += term;
        }
        return sum;
    }

    for (int k = 0; k < kKummerTermCap; ++k) {
        term *= (p.a + k) * rho / ((p.b + k) * (k + 1));
        if (std::abs(term) < tol * std::abs(sum)) {
            return sum + term;
        }
        sum += term;
        if (!std::isfinite(sum)) {
            break;
        }
    }
    throw KummerConvergenceError(sum, kKummerTermCap);
}

double kummer_m(double a, double b, double rho, double tol) {
    return kummer_m(KummerParams::make(a, b), rho, tol);
}

double kummer_m_derivative(double a, double b, double rho, double tol) {
    if (a == 0.0 || nonpositive_integer_degree(a) == 0) {
        return 0.0;
    }
    return a / b * kummer_m(a + 1.0, b + 1.0, rho, tol);
}

double kummer_m_second_derivative(double a, double b, double rho, double tol) {
    const double coeff = a * (a + 1.0) / (b * (b + 1.0));
    if (coeff == 0.0 || nonpositive_integer_degree(a) == 0 || nonpositive_integer_degree(a) == 1) {
        return 0.0;
    }
    return coeff * kummer_m(a + 2.0, b + 2.0, rho, tol);
}

}  // namespace conjdirac
