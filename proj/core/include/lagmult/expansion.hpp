#ifndef LAGMULT_EXPANSION_HPP
#define LAGMULT_EXPANSION_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lagmult {

using RealFunction = std::function<double(double)>;

/// Laguerre order alpha > -1 (also used for weight exponents).
class Order {
 public:
  explicit Order(double alpha) : alpha_(alpha) {
    if (!(alpha > -1.0) || !std::isfinite(alpha)) {
      throw std::domain_error("order must satisfy alpha > -1, got " + std::to_string(alpha));
    }
  }
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Finite Fourier-Laguerre coefficient vector hat f_alpha(0..N), tagged with
/// its order. Represents (Gamma(alpha+1))^{-1} sum_k coeffs[k] L_k^alpha.
struct LaguerreExpansion {
  Order order;
  std::vector<double> coeffs;

  LaguerreExpansion(Order o, std::vector<double> c) : order(o), coeffs(std::move(c)) {}

  double alpha() const noexcept { return order.alpha(); }
  std::size_t size() const noexcept { return coeffs.size(); }
};

/// Polynomial in the monomial basis, coeffs[j] multiplies x^j.
struct Polynomial {
  std::vector<double> coeffs;

  double operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  int degree() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1; }
};

}  // namespace lagmult

#endif
