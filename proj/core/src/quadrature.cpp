#include "lagmult/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "lagmult/errors.hpp"
#include "lagmult/special.hpp"

namespace lagmult {

namespace {

constexpr double kRescaleAbove = 1e100;
constexpr double kRescaleBy = 1e-100;
const double kLogRescale = std::log(1e100);

// L_n(x) / L_{n-1}(x) up to a common positive factor, for Newton steps.
std::pair<double, double> laguerre_pair(int n, double alpha, double x) {
  double prev = 1.0;
  double cur = alpha + 1.0 - x;
  for (int k = 1; k < n; ++k) {
    const double kk = k;
    const double next = ((2.0 * kk + alpha + 1.0 - x) * cur - (kk + alpha) * prev) / (kk + 1.0);
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleAbove) {
      prev *= kRescaleBy;
      cur *= kRescaleBy;
    }
  }
  return {cur, prev};
}

double polish_root(int n, double alpha, double x) {
  for (int it = 0; it < 3; ++it) {
    const auto [ln, lnm1] = laguerre_pair(n, alpha, x);
    const double denom = n * ln - (n + alpha) * lnm1;
    if (denom == 0.0 || !std::isfinite(denom)) break;
    const double step = x * ln / denom;
    if (!std::isfinite(step) || std::abs(step) > 1e-8 * (1.0 + x)) break;
    x -= step;
    if (std::abs(step) <= 1e-17 * x) break;
  }
  return x;
}

// log sum_{k<n} p_k(x)^2 for the orthonormal family of order alpha.
double log_christoffel_sum(int n, double alpha, double x) {
  double shift = 0.0;  // values are v * exp(shift)
  double prev = 0.0;
  double cur = std::exp(-0.5 * log_gamma(alpha + 1.0));
  double sum = cur * cur;
  for (int k = 0; k + 1 < n; ++k) {
    const double kk = k;
    const double a = 2.0 * kk + alpha + 1.0;
    const double b_k = std::sqrt(kk * (kk + alpha));
    const double b_next = std::sqrt((kk + 1.0) * (kk + 1.0 + alpha));
    const double next = ((a - x) * cur - b_k * prev) / b_next;
    prev = cur;
    cur = next;
    sum += cur * cur;
    if (std::abs(cur) > kRescaleAbove) {
      prev *= kRescaleBy;
      cur *= kRescaleBy;
      sum *= kRescaleBy * kRescaleBy;
      shift += kLogRescale;
    }
  }
  return std::log(sum) + 2.0 * shift;
}

}  // namespace

QuadratureRule::QuadratureRule(double alpha, std::vector<double> nodes, std::vector<double> log_weights)
    : alpha_(alpha), nodes_(std::move(nodes)), log_weights_(std::move(log_weights)) {
  if (nodes_.size() != log_weights_.size()) {
    throw std::invalid_argument("QuadratureRule: nodes and weights differ in length");
  }
  weights_.reserve(log_weights_.size());
  for (double lw : log_weights_) weights_.push_back(std::exp(lw));
}

QuadratureRule build_quadrature(double alpha, int n) {
  if (!(alpha > -1.0)) throw std::domain_error("build_quadrature: alpha must exceed -1");
  if (n < 1) throw std::domain_error("build_quadrature: n must be at least 1");

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k * (k + alpha));

  std::vector<double> nodes(n);
  if (n == 1) {
    nodes[0] = alpha + 1.0;
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("Jacobi eigen-solver did not converge (alpha = " + std::to_string(alpha) +
                           ", n = " + std::to_string(n) + ")");
    }
    for (int i = 0; i < n; ++i) nodes[i] = polish_root(n, alpha, solver.eigenvalues()(i));
  }

  std::vector<double> log_w(n);
  for (int i = 0; i < n; ++i) {
    if (!(nodes[i] > 0.0) || (i > 0 && !(nodes[i] > nodes[i - 1]))) {
      throw NumericalError("Gauss-Laguerre nodes not strictly increasing and positive (alpha = " +
                           std::to_string(alpha) + ", n = " + std::to_string(n) + ")");
    }
    log_w[i] = -log_christoffel_sum(n, alpha, nodes[i]);
  }
  return QuadratureRule(alpha, std::move(nodes), std::move(log_w));
}

Eigen::MatrixXd orthonormal_table(double beta, std::span<const double> nodes,
                                  std::span<const double> log_weights, int K) {
  if (!(beta > -1.0)) throw std::domain_error("orthonormal_table: beta must exceed -1");
  const auto n = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXd table(n, K + 1);
  const double log_p0 = -0.5 * log_gamma(beta + 1.0);

  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = nodes[i];
    double shift = 0.5 * log_weights[i] + log_p0;
    double prev = 0.0;
    double cur = 1.0;
    auto store = [&](int k) {
      table(i, k) = cur == 0.0 ? 0.0 : std::copysign(std::exp(shift + std::log(std::abs(cur))), cur);
    };
    store(0);
    for (int k = 0; k < K; ++k) {
      const double kk = k;
      const double a = 2.0 * kk + beta + 1.0;
      const double b_k = std::sqrt(kk * (kk + beta));
      const double b_next = std::sqrt((kk + 1.0) * (kk + 1.0 + beta));
      const double next = ((a - x) * cur - b_k * prev) / b_next;
      prev = cur;
      cur = next;
      if (std::abs(cur) > kRescaleAbove) {
        prev *= kRescaleBy;
        cur *= kRescaleBy;
        shift += kLogRescale;
      }
      store(k + 1);
    }
  }
  return table;
}

}  // namespace lagmult
