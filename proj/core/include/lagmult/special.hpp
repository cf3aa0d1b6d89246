#ifndef LAGMULT_SPECIAL_HPP
#define LAGMULT_SPECIAL_HPP

#include <cmath>
#include <span>

namespace lagmult {

/// Gamma function on the positive axis (and wherever std::tgamma is finite).
double gamma_fn(double x);

/// log|Gamma(x)|, reentrant.
double log_gamma(double x);

/// A_n^a = prod_{j=1..n} (a + j) / j, the binomial coefficient C(n + a, n).
/// Defined for every real a; A_0^a = 1 and L_n^a(0) = A_n^a.
double binom_A(long n, double a);

/// Classical Laguerre polynomial L_n^alpha(x) by forward three-term recurrence.
/// Throws NumericalError when the value is not representable.
double laguerre_eval(long n, double alpha, double x);

/// R_n^alpha(x) = L_n^alpha(x) / A_n^alpha.
double laguerre_normalized(long n, double alpha, double x);

/// Fills out[k] = L_k^alpha(x) for k < out.size().
void laguerre_values(double alpha, double x, std::span<double> out);

/// A real number stored as sign * exp(log_abs); sign is -1, 0 or +1.
struct SignedLog {
  double sign = 0.0;
  double log_abs = -INFINITY;

  double value() const { return sign == 0.0 ? 0.0 : sign * std::exp(log_abs); }
  double abs_pow(double p) const { return sign == 0.0 ? 0.0 : std::exp(p * log_abs); }
};

/// sum_k c[k] L_k^alpha(x) e^{-x/2}, evaluated with running rescaling so that
/// neither the polynomial values nor e^{-x/2} over/underflow. If log_magnitude
/// is given it receives log sum_k |c[k] L_k^alpha(x)| e^{-x/2}, the scale of the
/// rounding error in the result.
SignedLog damped_laguerre_series(double alpha, std::span<const double> c, double x,
                                 double* log_magnitude = nullptr);

}  // namespace lagmult

#endif
