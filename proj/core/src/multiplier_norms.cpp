#include "lagmult/multiplier_norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lagmult/errors.hpp"
#include "lagmult/quadrature.hpp"
#include "lagmult/random.hpp"
#include "lagmult/spectral.hpp"

namespace lagmult {

std::string_view to_string(NormKind kind) {
  switch (kind) {
    case NormKind::exact:
      return "exact";
    case NormKind::sv_lower:
      return "sv_lower";
    case NormKind::pr_characterization:
      return "pr_characterization";
    case NormKind::search_lower:
      return "search_lower";
  }
  return "unknown";
}

double NormReport::detail(std::string_view name) const {
  for (const auto& [key, v] : details) {
    if (key == name) return v;
  }
  throw std::out_of_range("NormReport has no detail '" + std::string(name) + "'");
}

LaguerreExpansion apply_multiplier(const MultiplierSeq& m, const LaguerreExpansion& e) {
  std::vector<double> c(e.coeffs.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = m[k] * e.coeffs[k];
  return {e.order, std::move(c)};
}

NormReport m2_norm_exact(const MultiplierSeq& m, std::size_t K) {
  NormReport rep;
  rep.kind = NormKind::exact;
  rep.value = m.sup_abs();
  double head = 0.0;
  for (std::size_t k = 0; k <= K; ++k) head = std::max(head, std::abs(m[k]));
  rep.basis_size = K + 1;
  rep.residual = rep.value - head;
  return rep;
}

int subspace_start(double alpha, int l) {
  const double bound = (static_cast<double>(l) - 1.0 - alpha) / 2.0;
  return bound > 0.0 ? static_cast<int>(std::ceil(bound)) : 0;
}

Eigen::MatrixXd weighted_m2_matrix(const MultiplierSeq& m, Order alpha, double lambda, int N, int k0) {
  if (N < 1) throw std::invalid_argument("weighted_m2_matrix: N must be positive");
  if (!(lambda > 0.0)) throw std::domain_error("weighted_m2_matrix: lambda must be positive");
  if (k0 < 0 || k0 >= N) throw std::invalid_argument("weighted_m2_matrix: subspace start outside the basis");
  const double a = alpha.alpha();
  const double b = a + lambda;
  const auto rule_b = build_quadrature(b, N);
  const Eigen::MatrixXd Tb = orthonormal_table(b, rule_b, N - 1);
  const Eigen::MatrixXd Ta = orthonormal_table(a, rule_b, N - 1);

  // Column k: coordinates of p_k^alpha in the orthonormal alpha+lambda basis.
  const Eigen::Index n = N - k0;
  const Eigen::MatrixXd S = (Tb.transpose() * Ta).rightCols(n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(S);
  const Eigen::MatrixXd R = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();

  Eigen::MatrixXd X = S;
  for (Eigen::Index j = 0; j < n; ++j) X.col(j) *= m[static_cast<std::size_t>(j + k0)];
  // M = X R^{-1}: y = R c is an isometric coordinate on the subspace.
  return R.transpose().triangularView<Eigen::Lower>().solve(X.transpose()).transpose();
}

NormReport weighted_m2_norm(const MultiplierSeq& m, Order alpha, double lambda, int N, int iters, int k0,
                            std::uint64_t seed) {
  if (iters < 1) throw std::invalid_argument("weighted_m2_norm: iters must be positive");
  const Eigen::MatrixXd M = weighted_m2_matrix(m, alpha, lambda, N, k0);

  NormReport rep;
  rep.kind = NormKind::sv_lower;
  rep.alpha = alpha.alpha();
  rep.gamma = alpha.alpha() + lambda;
  rep.delta = rep.gamma;
  rep.basis_size = static_cast<std::size_t>(N);

  Rng rng(seed);
  Eigen::VectorXd x(M.cols());
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.uniform(-1.0, 1.0);
  x.normalize();

  double rq = 0.0;
  double prev = -1.0;
  rep.converged = false;
  const int max_steps = 2 * iters;
  for (int step = 1; step <= max_steps; ++step) {
    const Eigen::VectorXd z = M.transpose() * (M * x);
    rq = x.dot(z);
    rep.iterations = static_cast<std::size_t>(step);
    if (rq <= 0.0) {
      rq = 0.0;
      rep.residual = 0.0;
      rep.converged = true;
      break;
    }
    rep.residual = (z - rq * x).norm() / rq;
    const bool settled = std::abs(rq - prev) < 1e-10 * rq;
    if (settled && rep.residual < 1e-6) {
      rep.converged = true;
      break;
    }
    prev = rq;
    x = z / z.norm();
  }
  rep.value = std::sqrt(rq);
  return rep;
}

std::vector<double> default_r_grid(int density) {
  if (density < 1) throw std::invalid_argument("r-grid density must be positive");
  std::vector<double> grid;
  for (int j = 0; j <= 19 * density; ++j) {
    grid.push_back(1.0 - std::exp2(-static_cast<double>(j) / (2.0 * density)));
  }
  return grid;
}

NormReport mpinfty_norm(const MultiplierSeq& m, double p, Order alpha, const std::vector<double>& r_grid) {
  if (!(alpha.alpha() >= 0.0)) throw std::domain_error("mpinfty_norm requires alpha >= 0");
  if (!(p >= 1.0)) throw std::domain_error("mpinfty_norm requires p >= 1");
  if (r_grid.empty()) throw std::invalid_argument("mpinfty_norm: empty r-grid");
  NormReport rep;
  rep.kind = NormKind::pr_characterization;
  rep.p = p;
  rep.q = kInf;
  rep.alpha = alpha.alpha();
  rep.gamma = alpha.alpha();
  rep.r_grid_size = r_grid.size();
  for (double r : r_grid) {
    if (!(r >= 0.0 && r <= 0.999)) throw std::domain_error("mpinfty_norm: r-grid must lie in [0, 0.999]");
    const AbelPoissonMeans P(m, r, alpha);
    const double v = P.norm(p);
    rep.curve.emplace_back(r, v);
    rep.value = std::max(rep.value, v);
    rep.residual = std::max(rep.residual, P.truncation_bound());
    rep.basis_size = std::max(rep.basis_size, P.terms());
  }
  return rep;
}

namespace {

constexpr int kCandidateDegree = 64;

struct Candidate {
  const char* cls;
  std::vector<double> coeffs;
};

std::vector<Candidate> candidate_set(double alpha, int trials, std::uint64_t seed) {
  std::vector<Candidate> out;
  const std::size_t len = kCandidateDegree + 1;
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<double> c(k + 1, 0.0);
    c[k] = 1.0;
    out.push_back({"single", std::move(c)});
  }
  for (std::size_t lo = 1; lo < len; lo *= 2) {
    const std::size_t hi = std::min(2 * lo, len);
    std::vector<double> c(hi, 0.0);
    std::fill(c.begin() + static_cast<std::ptrdiff_t>(lo), c.end(), 1.0);
    out.push_back({"block", std::move(c)});
  }
  for (double r : {0.5, 0.8, 0.9, 0.95}) {
    std::vector<double> c(len);
    double rk = 1.0;
    for (auto& v : c) {
      v = rk;
      rk *= r;
    }
    out.push_back({"abel", std::move(c)});
  }
  Rng rng(seed);
  const double lg = log_gamma(alpha + 1.0);
  for (int t = 0; t < trials; ++t) {
    const auto deg = static_cast<std::size_t>(rng.uniform_int(1, kCandidateDegree));
    std::vector<double> c(deg + 1);
    for (std::size_t k = 0; k <= deg; ++k) {
      const double log_A = log_gamma(k + alpha + 1.0) - log_gamma(k + 1.0) - lg;
      c[k] = rng.uniform(-1.0, 1.0) * std::exp(0.5 * (lg - log_A));
    }
    out.push_back({"random", std::move(c)});
  }
  return out;
}

}  // namespace

NormReport mpq_lower_bound(const MultiplierSeq& m, const SpaceParams& from, const SpaceParams& to, Order alpha,
                           int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("mpq_lower_bound: trials must be positive");
  constexpr int kRuleSize = 2 * kCandidateDegree + 32;
  const auto rule_from = build_quadrature(from.gamma, kRuleSize);
  const auto rule_to = to.gamma == from.gamma ? rule_from : build_quadrature(to.gamma, kRuleSize);

  NormReport rep;
  rep.kind = NormKind::search_lower;
  rep.p = from.p;
  rep.q = to.p;
  rep.alpha = alpha.alpha();
  rep.gamma = from.gamma;
  rep.delta = to.gamma;
  rep.basis_size = kCandidateDegree + 1;
  rep.details = {{"single", 0.0}, {"block", 0.0}, {"abel", 0.0}, {"random", 0.0}};

  for (auto& cand : candidate_set(alpha.alpha(), trials, seed)) {
    const LaguerreExpansion f(alpha, std::move(cand.coeffs));
    const double den = weighted_lp_norm(f, from, rule_from);
    if (!(den > 0.0)) continue;
    const double num = weighted_lp_norm(apply_multiplier(m, f), to, rule_to);
    const double ratio = num / den;
    ++rep.iterations;
    rep.value = std::max(rep.value, ratio);
    for (auto& [key, v] : rep.details) {
      if (key == cand.cls) v = std::max(v, ratio);
    }
  }
  return rep;
}

DualityReport adjoint_duality_check(const MultiplierSeq& m, double p, double gamma, Order alpha, int trials,
                                    std::uint64_t seed) {
  if (!(p > 1.0 && p < kInf)) throw std::domain_error("adjoint_duality_check: need 1 < p < inf");
  const double a = alpha.alpha();
  if (!(gamma > -1.0 && gamma < p * (a + 1.0) - 1.0)) {
    throw std::domain_error("adjoint_duality_check: need -1 < gamma < p(alpha+1) - 1");
  }
  DualityReport rep;
  rep.p_dual = conjugate_exponent(p);
  rep.gamma_dual = a * rep.p_dual - gamma * rep.p_dual / p;
  const SpaceParams primal(p, gamma);
  const SpaceParams dual(rep.p_dual, rep.gamma_dual);
  rep.primal = mpq_lower_bound(m, primal, primal, alpha, trials, seed);
  rep.dual = mpq_lower_bound(m, dual, dual, alpha, trials, seed);
  rep.ratio = rep.primal.value / rep.dual.value;
  return rep;
}

}  // namespace lagmult
