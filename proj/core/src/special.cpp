#include "lagmult/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lagmult/errors.hpp"

namespace lagmult {

namespace {

constexpr double kRescaleAbove = 1e100;
constexpr double kRescaleBy = 1e-100;
const double kLogRescale = std::log(1e100);

void check_alpha(double alpha) {
  if (!(alpha > -1.0)) {
    throw std::domain_error("Laguerre order must satisfy alpha > -1, got " + std::to_string(alpha));
  }
}

}  // namespace

double gamma_fn(double x) { return std::tgamma(x); }

double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double binom_A(long n, double a) {
  if (n < 0) throw std::domain_error("binom_A: n must be non-negative");
  double prod = 1.0;
  for (long j = 1; j <= n; ++j) {
    prod *= (a + static_cast<double>(j)) / static_cast<double>(j);
  }
  return prod;
}

double laguerre_eval(long n, double alpha, double x) {
  check_alpha(alpha);
  if (n < 0) throw std::domain_error("laguerre_eval: n must be non-negative");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = alpha + 1.0 - x;
  for (long k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double next = ((2.0 * kk + alpha + 1.0 - x) * cur - (kk + alpha) * prev) / (kk + 1.0);
    prev = cur;
    cur = next;
  }
  if (!std::isfinite(cur)) {
    throw NumericalError("L_" + std::to_string(n) + "^" + std::to_string(alpha) + "(" +
                         std::to_string(x) + ") overflows double precision");
  }
  return cur;
}

double laguerre_normalized(long n, double alpha, double x) {
  return laguerre_eval(n, alpha, x) / binom_A(n, alpha);
}

void laguerre_values(double alpha, double x, std::span<double> out) {
  check_alpha(alpha);
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = alpha + 1.0 - x;
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double kk = static_cast<double>(k);
    out[k + 1] = ((2.0 * kk + alpha + 1.0 - x) * out[k] - (kk + alpha) * out[k - 1]) / (kk + 1.0);
  }
  if (!std::isfinite(out.back())) {
    throw NumericalError("Laguerre table overflows at x = " + std::to_string(x));
  }
}

SignedLog damped_laguerre_series(double alpha, std::span<const double> c, double x, double* log_magnitude) {
  check_alpha(alpha);
  if (log_magnitude) *log_magnitude = -INFINITY;
  if (c.empty()) return {};
  // Values are carried as v * exp(shift).
  double shift = -0.5 * x;
  double prev = 1.0;
  double acc = c[0];
  double mag = std::abs(c[0]);
  if (c.size() > 1) {
    double cur = alpha + 1.0 - x;
    acc += c[1] * cur;
    mag += std::abs(c[1] * cur);
    for (std::size_t k = 1; k + 1 < c.size(); ++k) {
      const double kk = static_cast<double>(k);
      const double next = ((2.0 * kk + alpha + 1.0 - x) * cur - (kk + alpha) * prev) / (kk + 1.0);
      prev = cur;
      cur = next;
      acc += c[k + 1] * cur;
      mag += std::abs(c[k + 1] * cur);
      if (std::abs(cur) > kRescaleAbove || mag > kRescaleAbove) {
        prev *= kRescaleBy;
        cur *= kRescaleBy;
        acc *= kRescaleBy;
        mag *= kRescaleBy;
        shift += kLogRescale;
      }
    }
  }
  if (!std::isfinite(acc)) {
    throw NumericalError("damped Laguerre series is not finite at x = " + std::to_string(x));
  }
  if (log_magnitude && mag > 0.0) *log_magnitude = std::log(mag) + shift;
  if (acc == 0.0) return {};
  return {acc > 0.0 ? 1.0 : -1.0, std::log(std::abs(acc)) + shift};
}

}  // namespace lagmult
