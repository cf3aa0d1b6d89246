#ifndef LAGMULT_QUADRATURE_HPP
#define LAGMULT_QUADRATURE_HPP

#include <cmath>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace lagmult {

/// Generalized Gauss-Laguerre rule for the weight x^alpha e^{-x} on (0, inf).
///
/// Immutable once built. Weights are stored together with their logarithms:
/// for large rules the weights at the far nodes underflow, while their logs
/// stay usable for products like w_i |f(x_i)|^p.
class QuadratureRule {
 public:
  QuadratureRule(double alpha, std::vector<double> nodes, std::vector<double> log_weights);

  double alpha() const noexcept { return alpha_; }
  std::size_t degree() const noexcept { return nodes_.size(); }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> log_weights() const noexcept { return log_weights_; }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(nodes_[i]);
    return sum;
  }

 private:
  double alpha_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> log_weights_;
};

/// Golub-Welsch: eigenvalues of the symmetric Jacobi matrix with diagonal
/// 2k+alpha+1 and off-diagonal sqrt(k(k+alpha)), Newton-polished, with
/// Christoffel weights 1/sum_k p_k(x_i)^2 accumulated in log scale.
QuadratureRule build_quadrature(double alpha, int n);

/// Table T(i, k) = sqrt(w_i) p_k^beta(x_i), k = 0..K, where p_k^beta is the
/// orthonormal Laguerre polynomial L_k^beta / sqrt(Gamma(beta+1) A_k^beta)
/// for the weight x^beta e^{-x}. Nodes and weights may come from a rule of a
/// different order; with matching order the columns are orthonormal.
Eigen::MatrixXd orthonormal_table(double beta, std::span<const double> nodes,
                                  std::span<const double> log_weights, int K);

inline Eigen::MatrixXd orthonormal_table(double beta, const QuadratureRule& rule, int K) {
  return orthonormal_table(beta, rule.nodes(), rule.log_weights(), K);
}

}  // namespace lagmult

#endif
