#include "lagmult/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lagmult/errors.hpp"

namespace lagmult {

namespace {

const double kLogNoise = std::log(1e-13);

double log_binom_A(double k, double alpha) {
  return log_gamma(k + alpha + 1.0) - log_gamma(k + 1.0) - log_gamma(alpha + 1.0);
}

void check_rule_order(const QuadratureRule& rule, double alpha, const char* who) {
  if (std::abs(rule.alpha() - alpha) > 1e-12 * (1.0 + std::abs(alpha))) {
    throw std::invalid_argument(std::string(who) + ": rule order " + std::to_string(rule.alpha()) +
                                " differs from expansion order " + std::to_string(alpha));
  }
}

// log of sup|m| / Gamma(alpha+1) * sum_{k >= K} r^k B_k, where B_k bounds
// |L_k^alpha(x)| e^{-x/2}.
double log_abel_tail(double r, double alpha, std::size_t K) {
  if (r == 0.0) return -INFINITY;
  const double kk = static_cast<double>(K);
  if (alpha < 0.0) return std::log(2.0) + kk * std::log(r) - std::log1p(-r);
  const double ratio = r * (kk + 1.0 + alpha) / (kk + 1.0);
  if (ratio >= 1.0) return INFINITY;
  return kk * std::log(r) + log_binom_A(kk, alpha) - std::log1p(-ratio);
}

struct Truncation {
  std::size_t terms;
  double bound;
};

Truncation abel_truncation(const MultiplierSeq& m, double r, double alpha, double tol) {
  const double sup_m = m.sup_abs();
  const double log_scale = sup_m > 0.0 ? std::log(sup_m) - log_gamma(alpha + 1.0) : -INFINITY;
  if (const auto s = m.support()) return {std::max<std::size_t>(*s, 1), 0.0};
  if (r == 0.0 || sup_m == 0.0) return {1, 0.0};

  constexpr std::size_t kMaxTerms = 5'000'000;
  double k0 = std::ceil(std::log(tol * std::pow(1.0 - r, alpha + 2.0)) / std::log(r));
  std::size_t K = static_cast<std::size_t>(std::clamp(k0, 1.0, static_cast<double>(kMaxTerms)));
  while (true) {
    const double bound = std::exp(log_scale + log_abel_tail(r, alpha, K));
    if (bound <= tol) return {K, bound};
    if (K >= kMaxTerms) {
      throw TruncationError("Abel-Poisson series for " + m.spec() + " at r = " + std::to_string(r) +
                            " needs more than " + std::to_string(kMaxTerms) + " terms (tail bound " +
                            std::to_string(bound) + ")");
    }
    K = std::min(kMaxTerms, static_cast<std::size_t>(1.25 * static_cast<double>(K)) + 10);
  }
}

void check_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("Abel-Poisson parameter r must lie in [0, 1)");
}

}  // namespace

LaguerreExpansion analyze(const RealFunction& f, Order order, int N, const QuadratureRule& rule) {
  const double alpha = order.alpha();
  check_rule_order(rule, alpha, "analyze");
  if (N < 0) throw std::invalid_argument("analyze: N must be non-negative");
  if (rule.degree() < static_cast<std::size_t>(N) + 1) {
    throw std::invalid_argument("analyze: rule with " + std::to_string(rule.degree()) +
                                " nodes cannot resolve " + std::to_string(N + 1) + " coefficients");
  }
  const Eigen::MatrixXd T = orthonormal_table(alpha, rule, N);
  const auto x = rule.nodes();
  const auto log_w = rule.log_weights();
  Eigen::VectorXd s(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = f(x[i]);
    if (!std::isfinite(v)) throw NumericalError("analyze: f is not finite at x = " + std::to_string(x[i]));
    s[static_cast<Eigen::Index>(i)] = v == 0.0 ? 0.0 : std::copysign(std::exp(0.5 * log_w[i] + std::log(std::abs(v))), v);
  }
  const Eigen::VectorXd c = T.transpose() * s;
  const double lg = log_gamma(alpha + 1.0);
  std::vector<double> coeffs(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    coeffs[static_cast<std::size_t>(k)] = c[k] * std::exp(0.5 * (lg - log_binom_A(k, alpha)));
  }
  return {order, std::move(coeffs)};
}

double synthesize(const LaguerreExpansion& e, double x) {
  const double alpha = e.alpha();
  double prev = 0.0;
  double cur = 1.0;
  double acc = 0.0;
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    acc += e.coeffs[k] * cur;
    const double kk = static_cast<double>(k);
    const double next = ((2.0 * kk + alpha + 1.0 - x) * cur - (kk + alpha) * prev) / (kk + 1.0);
    prev = cur;
    cur = next;
  }
  const double v = acc / gamma_fn(alpha + 1.0);
  if (!std::isfinite(v)) throw NumericalError("synthesize overflows at x = " + std::to_string(x));
  return v;
}

double parseval_defect(const LaguerreExpansion& e, const RealFunction& f, const QuadratureRule& rule) {
  const double alpha = e.alpha();
  check_rule_order(rule, alpha, "parseval_defect");
  double lhs = 0.0;
  double A = 1.0;
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    if (k > 0) A *= (alpha + static_cast<double>(k)) / static_cast<double>(k);
    lhs += A * e.coeffs[k] * e.coeffs[k];
  }
  lhs /= gamma_fn(alpha + 1.0);
  const double n = weighted_lp_norm(f, SpaceParams(2.0, alpha), rule);
  const double rhs = n * n;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

double pardif_ratio(const LaguerreExpansion& e, double lambda, const QuadratureRule& rule_shifted) {
  if (!(lambda >= 0.0)) throw std::domain_error("pardif_ratio: lambda must be non-negative");
  const double beta = e.alpha() + lambda;
  check_rule_order(rule_shifted, beta, "pardif_ratio");
  const std::vector<double> d = lambda == 0.0 ? e.coeffs : frac_diff_finite(e.coeffs, lambda);
  double lhs = 0.0;
  double A = 1.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k > 0) A *= (beta + static_cast<double>(k)) / static_cast<double>(k);
    lhs += A * d[k] * d[k];
  }
  const double n = weighted_lp_norm(e, SpaceParams(2.0, beta), rule_shifted);
  if (n == 0.0) throw std::domain_error("pardif_ratio: undefined for the zero function");
  return lhs / (n * n);
}

LcoeffFit lcoeff_constant(Order alpha, double lambda, std::span<const Polynomial> testbank, double tol) {
  if (!(lambda > 0.0)) throw std::domain_error("lcoeff_constant: lambda must be positive");
  if (testbank.empty()) throw std::invalid_argument("lcoeff_constant: empty test bank");
  const Order beta(alpha.alpha() + lambda);

  std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
  double ab = 0.0;
  double bb = 0.0;
  for (const auto& f : testbank) {
    const int d = f.degree();
    if (d < 3) throw std::invalid_argument("lcoeff_constant: test polynomials need degree >= 3");
    const auto ra = build_quadrature(alpha.alpha(), d + 2);
    const auto rb = build_quadrature(beta.alpha(), d + 2);
    const RealFunction fn = [&f](double x) { return f(x); };
    auto a = frac_diff_finite(analyze(fn, alpha, d, ra).coeffs, lambda);
    auto b = analyze(fn, beta, d, rb).coeffs;
    for (std::size_t k = 0; k < a.size(); ++k) {
      ab += a[k] * b[k];
      bb += b[k] * b[k];
    }
    pairs.emplace_back(std::move(a), std::move(b));
  }
  if (bb == 0.0) throw std::invalid_argument("lcoeff_constant: test bank is identically zero");

  LcoeffFit fit;
  fit.constant = ab / bb;
  for (const auto& [a, b] : pairs) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      num = std::max(num, std::abs(a[k] - fit.constant * b[k]));
      den = std::max(den, std::abs(a[k]));
    }
    fit.max_residual = std::max(fit.max_residual, den == 0.0 ? num : num / den);
  }
  if (!(fit.max_residual <= tol)) {
    throw IdentityViolation("coefficient relation at alpha = " + std::to_string(alpha.alpha()) +
                            ", lambda = " + std::to_string(lambda) + " leaves residual " +
                            std::to_string(fit.max_residual));
  }
  return fit;
}

KernelValue abel_poisson_kernel(const MultiplierSeq& m, double r, Order order, double x, double tol) {
  check_r(r);
  const double alpha = order.alpha();
  const Truncation t = abel_truncation(m, r, alpha, tol);
  std::vector<double> c(t.terms);
  double rk = 1.0;
  for (std::size_t k = 0; k < t.terms; ++k) {
    c[k] = rk * m[k];
    rk *= r;
  }
  const SignedLog s = damped_laguerre_series(alpha, c, x);
  const double lift = 0.5 * x - log_gamma(alpha + 1.0);
  KernelValue out;
  out.value = s.sign == 0.0 ? 0.0 : s.sign * std::exp(s.log_abs + lift);
  out.error_bound = t.bound * std::exp(0.5 * x);
  out.terms = t.terms;
  return out;
}

AbelPoissonMeans::AbelPoissonMeans(const MultiplierSeq& m, double r, Order order, double tol)
    : alpha_(order.alpha()), log_gamma_(log_gamma(order.alpha() + 1.0)) {
  check_r(r);
  using F = MultiplierSeq::Family;
  if (m.family() == F::constant || m.family() == F::abel) {
    closed_form_ = true;
    closed_scale_ = m[0];
    closed_rho_ = m.family() == F::abel ? r * m[1] : r;
    x_extent_ = 40.0;
    return;
  }
  const Truncation t = abel_truncation(m, r, alpha_, tol);
  coeffs_.resize(t.terms);
  double rk = 1.0;
  for (std::size_t k = 0; k < t.terms; ++k) {
    coeffs_[k] = rk * m[k];
    rk *= r;
  }
  truncation_bound_ = t.bound;
  x_extent_ = 4.0 * static_cast<double>(t.terms) + 40.0;
}

SignedLog AbelPoissonMeans::damped(double x) const {
  if (closed_form_) {
    if (closed_scale_ == 0.0) return {};
    const double rho = closed_rho_;
    return {closed_scale_ > 0.0 ? 1.0 : -1.0,
            std::log(std::abs(closed_scale_)) - log_gamma_ - (alpha_ + 1.0) * std::log1p(-rho) -
                x * (rho / (1.0 - rho) + 0.5)};
  }
  double log_mag = 0.0;
  SignedLog s = damped_laguerre_series(alpha_, coeffs_, x, &log_mag);
  // Long series cancel down to rounding noise far out; that noise, weighted by
  // x^alpha over a wide range, would otherwise dominate the norm.
  if (s.log_abs < log_mag + kLogNoise) return {};
  s.log_abs -= log_gamma_;
  return s;
}

double AbelPoissonMeans::operator()(double x) const {
  const SignedLog s = damped(x);
  return s.sign == 0.0 ? 0.0 : s.sign * std::exp(s.log_abs + 0.5 * x);
}

double AbelPoissonMeans::norm(double p) const {
  const DampedFunction g = [this](double x) { return damped(x); };
  if (p == kInf) return sup_damped(g, {}, x_extent_);
  const AdaptiveIntegral I = integrate_damped_power(g, p, alpha_, x_extent_);
  return std::pow(I.value, 1.0 / p);
}

LaguerreExpansion project_order(const LaguerreExpansion& e, Order beta) {
  if (!(beta.alpha() < e.alpha())) {
    throw std::domain_error("project_order: target order " + std::to_string(beta.alpha()) +
                            " must be below " + std::to_string(e.alpha()));
  }
  return {beta, e.coeffs};
}

double projection_check(int n, Order alpha, Order beta, double x) {
  if (!(beta.alpha() < alpha.alpha())) throw std::domain_error("projection_check: need beta < alpha");
  if (n < 0) throw std::invalid_argument("projection_check: n must be non-negative");
  const double gap = alpha.alpha() - beta.alpha();
  const auto rule = build_quadrature(gap - 1.0, 2 * n + 8);
  const double integral = rule.integrate([&](double t) { return laguerre_eval(n, alpha.alpha(), x + t); });
  const double lhs = integral / gamma_fn(gap);
  const double rhs = laguerre_eval(n, beta.alpha(), x);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

double leibniz_defect(std::span<const double> m, std::span<const double> h) {
  const std::size_t n = std::max(m.size(), h.size()) + 1;
  std::vector<double> mm(n, 0.0), hh(n, 0.0), prod(n, 0.0);
  std::copy(m.begin(), m.end(), mm.begin());
  std::copy(h.begin(), h.end(), hh.begin());
  for (std::size_t k = 0; k < n; ++k) prod[k] = mm[k] * hh[k];
  const auto d_prod = frac_diff_finite(prod, 1.0);
  const auto d_m = frac_diff_finite(mm, 1.0);
  const auto d_h = frac_diff_finite(hh, 1.0);
  double worst = 0.0;
  double scale = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double rhs = mm[k] * d_h[k] + hh[k + 1] * d_m[k];
    worst = std::max(worst, std::abs(d_prod[k] - rhs));
    scale = std::max(scale, std::abs(d_prod[k]));
  }
  return worst / scale;
}

}  // namespace lagmult
