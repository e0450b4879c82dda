#pragma once

#include <optional>

#include "conjdirac/core.hpp"

namespace conjdirac {

/// Maximum number of series terms summed by kummer_m before giving up.
inline constexpr int kKummerTermCap = 500;
/// Default relative truncation tolerance for the non-terminating series.
inline constexpr double kKummerDefaultTol = 1e-17;

/// Raised when the Kummer series fails to converge within kKummerTermCap terms.
class KummerConvergenceError : public NumericalError {
public:
    KummerConvergenceError(double partial_sum, int terms);

    double partial_sum() const noexcept { return partial_sum_; }
    int terms() const noexcept { return terms_; }

private:
    double partial_sum_;
    int terms_;
};

/// Parameters (a, b) of M(a, b, rho); polynomial_degree is set when a = -n_r.
struct KummerParams {
    double a = 0.0;
    double b = 1.0;
    std::optional<int> polynomial_degree;

    static KummerParams make(double a, double b);
};

/// Detects a in {0, -1, -2, ...} within 1e-12 (1 + |a|) and returns -a.
std::optional<int> nonpositive_integer_degree(double a);

/// Rising factorial (a)_n; (a)_0 = 1. Overflow saturates to +/-infinity.
double pochhammer(double a, int n);

/**
 * Confluent hypergeometric function M(a, b, rho) = 1F1(a; b; rho).
 *
 * Terms follow t_{k+1} = t_k (a+k) rho / ((b+k)(k+1)). For a = -n_r exactly
 * n_r + 1 terms are summed. Otherwise summation stops once the next term is
 * below tol times the partial sum.
 */
double kummer_m(double a, double b, double rho, double tol = kKummerDefaultTol);
double kummer_m(const KummerParams& p, double rho, double tol = kKummerDefaultTol);

/// dM/drho = (a/b) M(a+1, b+1, rho).
double kummer_m_derivative(double a, double b, double rho, double tol = kKummerDefaultTol);

/// d^2M/drho^2 = a(a+1)/(b(b+1)) M(a+2, b+2, rho).
double kummer_m_second_derivative(double a, double b, double rho, double tol = kKummerDefaultTol);

}  // namespace conjdirac
