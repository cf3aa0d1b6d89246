#ifndef LAGMULT_LP_NORM_HPP
#define LAGMULT_LP_NORM_HPP

#include <functional>
#include <limits>
#include <span>

#include "lagmult/expansion.hpp"
#include "lagmult/quadrature.hpp"
#include "lagmult/special.hpp"

namespace lagmult {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// (p, gamma) selecting L^p_{w(gamma)}: ||f|| = (int |f(x) e^{-x/2}|^p x^gamma dx)^{1/p},
/// or ess sup |f(x) e^{-x/2}| for p = inf.
struct SpaceParams {
  double p;
  double gamma;

  SpaceParams(double p_, double gamma_);
  bool is_inf() const noexcept { return p == kInf; }
};

/// Conjugate exponent p' with 1/p + 1/p' = 1.
double conjugate_exponent(double p);

/// x -> f(x) e^{-x/2} in signed-log form.
using DampedFunction = std::function<SignedLog(double)>;

DampedFunction damp(const RealFunction& f);
DampedFunction damp(const LaguerreExpansion& e);

/// Weighted norm on a Gauss-Laguerre rule. For p < inf the rule order must
/// equal space.gamma; the integral is taken after u = p x / 2 so the rule
/// weight u^gamma e^{-u} absorbs the damping exactly. For p = inf the sup is
/// taken over {0}, the rule nodes and a geometric grid 2^{k/8}, then refined.
double weighted_lp_norm(const RealFunction& f, const SpaceParams& space, const QuadratureRule& rule);
double weighted_lp_norm(const LaguerreExpansion& e, const SpaceParams& space, const QuadratureRule& rule);
double weighted_lp_norm(const DampedFunction& g, const SpaceParams& space, const QuadratureRule& rule);

/// sup_x |g(x)| over {0} u extra u {2^{k/8}} (k = -40.. up to x_max), plus a
/// golden-section refinement around the best grid point.
double sup_damped(const DampedFunction& g, std::span<const double> extra, double x_max = 0.0);

/// int_0^inf |g(x)|^p x^gamma dx by globally adaptive Gauss-Kronrod (7/15) on
/// log-spaced panels. x_extent marks where g is known to have become
/// negligible; panels continue past it until contributions vanish.
struct AdaptiveIntegral {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};
AdaptiveIntegral integrate_damped_power(const DampedFunction& g, double p, double gamma,
                                        double x_extent, double rel_tol = 1e-10);

}  // namespace lagmult

#endif
