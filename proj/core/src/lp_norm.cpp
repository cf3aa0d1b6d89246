#include "lagmult/lp_norm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagmult/errors.hpp"

namespace lagmult {

SpaceParams::SpaceParams(double p_, double gamma_) : p(p_), gamma(gamma_) {
  if (!(p >= 1.0)) throw std::domain_error("space exponent p must be >= 1, got " + std::to_string(p));
  if (!(gamma > -1.0) || !std::isfinite(gamma)) {
    throw std::domain_error("weight exponent gamma must exceed -1, got " + std::to_string(gamma));
  }
}

double conjugate_exponent(double p) {
  if (p == 1.0) return kInf;
  if (p == kInf) return 1.0;
  return p / (p - 1.0);
}

DampedFunction damp(const RealFunction& f) {
  return [f](double x) -> SignedLog {
    const double v = f(x);
    if (!std::isfinite(v)) {
      throw NumericalError("function value is not finite at x = " + std::to_string(x));
    }
    if (v == 0.0) return {};
    return {v > 0.0 ? 1.0 : -1.0, std::log(std::abs(v)) - 0.5 * x};
  };
}

DampedFunction damp(const LaguerreExpansion& e) {
  const double alpha = e.alpha();
  const double log_prefactor = -log_gamma(alpha + 1.0);
  return [alpha, log_prefactor, c = e.coeffs](double x) -> SignedLog {
    SignedLog s = damped_laguerre_series(alpha, c, x);
    s.log_abs += log_prefactor;
    return s;
  };
}

double weighted_lp_norm(const DampedFunction& g, const SpaceParams& space, const QuadratureRule& rule) {
  if (space.is_inf()) {
    const auto nodes = rule.nodes();
    return sup_damped(g, nodes, nodes.empty() ? 0.0 : nodes.back());
  }
  if (std::abs(rule.alpha() - space.gamma) > 1e-12 * (1.0 + std::abs(space.gamma))) {
    throw std::invalid_argument("weighted_lp_norm: rule order " + std::to_string(rule.alpha()) +
                                " does not match weight exponent " + std::to_string(space.gamma));
  }
  const double p = space.p;
  const auto u = rule.nodes();
  const auto log_w = rule.log_weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = 2.0 * u[i] / p;
    const SignedLog v = g(x);
    if (v.sign == 0.0) continue;
    if (std::isnan(v.log_abs)) throw NumericalError("non-finite sample in weighted_lp_norm");
    sum += std::exp(log_w[i] + u[i] + p * v.log_abs);
  }
  if (!std::isfinite(sum)) throw NumericalError("weighted_lp_norm overflowed");
  return std::pow(std::pow(2.0 / p, space.gamma + 1.0) * sum, 1.0 / p);
}

double weighted_lp_norm(const RealFunction& f, const SpaceParams& space, const QuadratureRule& rule) {
  return weighted_lp_norm(damp(f), space, rule);
}

double weighted_lp_norm(const LaguerreExpansion& e, const SpaceParams& space, const QuadratureRule& rule) {
  return weighted_lp_norm(damp(e), space, rule);
}

double sup_damped(const DampedFunction& g, std::span<const double> extra, double x_max) {
  std::vector<double> grid;
  grid.reserve(extra.size() + 160);
  grid.push_back(0.0);
  grid.insert(grid.end(), extra.begin(), extra.end());
  for (int k = -40;; ++k) {
    const double x = std::exp2(k / 8.0);
    if (k > 60 && x > x_max) break;
    grid.push_back(x);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  auto mag = [&](double x) {
    const SignedLog v = g(x);
    if (std::isnan(v.log_abs)) throw NumericalError("non-finite sample in sup_damped");
    return v.sign == 0.0 ? 0.0 : std::exp(v.log_abs);
  };

  std::size_t best = 0;
  double best_val = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = mag(grid[i]);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  // Golden-section search for the maximum inside the neighbouring grid cells.
  double lo = grid[best == 0 ? 0 : best - 1];
  double hi = grid[std::min(best + 1, grid.size() - 1)];
  if (hi > lo) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = mag(a);
    double fb = mag(b);
    for (int it = 0; it < 80 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
      if (fa > fb) {
        hi = b;
        b = a;
        fb = fa;
        a = hi - inv_phi * (hi - lo);
        fa = mag(a);
      } else {
        lo = a;
        a = b;
        fa = fb;
        b = lo + inv_phi * (hi - lo);
        fb = mag(b);
      }
    }
    best_val = std::max({best_val, fa, fb});
  }
  return best_val;
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class H>
Panel gk15(const H& h, double a, double b) {
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  const double fc = h(c);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = r * kXgk[j];
    const double f1 = h(c - dx);
    const double f2 = h(c + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {a, b, kronrod * r, std::abs((kronrod - gauss) * r)};
}

}  // namespace

AdaptiveIntegral integrate_damped_power(const DampedFunction& g, double p, double gamma,
                                        double x_extent, double rel_tol) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::domain_error("integrate_damped_power: p must be finite and >= 1");
  if (!(gamma > -1.0)) throw std::domain_error("integrate_damped_power: gamma must exceed -1");

  AdaptiveIntegral out;
  const double e1 = gamma + 1.0;
  auto h = [&](double t) {
    ++out.evaluations;
    const SignedLog v = g(std::exp(t));
    if (std::isnan(v.log_abs)) throw NumericalError("non-finite sample in integrate_damped_power");
    if (v.sign == 0.0) return 0.0;
    return std::exp(p * v.log_abs + e1 * t);
  };

  // Head piece [0, x0]: g is constant to working precision there.
  constexpr double x0 = 1e-14;
  const double head = g(0.0).abs_pow(p) * std::pow(x0, e1) / e1;

  const double t0 = std::log(x0);
  double t_end = std::log(std::max(x_extent, 1.0)) + 2.0;
  std::priority_queue<Panel> queue;
  std::vector<Panel> done;
  double total = head;
  double total_err = 0.0;
  for (double t = t0; t < t_end; t += 1.0) {
    const Panel pn = gk15(h, t, std::min(t + 1.0, t_end));
    total += pn.value;
    total_err += pn.error;
    queue.push(pn);
  }

  constexpr int kMaxEvaluations = 600000;
  for (int extension = 0; extension < 64; ++extension) {
    while (!queue.empty() && total_err > rel_tol * std::abs(total) + 1e-300 &&
           out.evaluations < kMaxEvaluations) {
      const Panel worst = queue.top();
      queue.pop();
      const double mid = 0.5 * (worst.a + worst.b);
      const Panel left = gk15(h, worst.a, mid);
      const Panel right = gk15(h, mid, worst.b);
      total += left.value + right.value - worst.value;
      total_err += left.error + right.error - worst.error;
      queue.push(left);
      queue.push(right);
    }
    // The last two units of t must carry nothing measurable.
    const Panel tail = gk15(h, t_end, t_end + 1.0);
    if (tail.value <= 1e-15 * std::abs(total)) {
      total += tail.value;
      break;
    }
    total += tail.value;
    total_err += tail.error;
    queue.push(tail);
    t_end += 1.0;
  }
  out.value = total;
  out.error = total_err;
  return out;
}

}  // namespace lagmult
