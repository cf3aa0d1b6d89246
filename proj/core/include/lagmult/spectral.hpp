#ifndef LAGMULT_SPECTRAL_HPP
#define LAGMULT_SPECTRAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lagmult/expansion.hpp"
#include "lagmult/lp_norm.hpp"
#include "lagmult/quadrature.hpp"
#include "lagmult/sequences.hpp"
#include "lagmult/special.hpp"

namespace lagmult {

/// coeffs[k] = int f R_k^alpha x^alpha e^{-x} dx for k = 0..N, by quadrature.
/// The rule must have order alpha and at least N+1 nodes.
LaguerreExpansion analyze(const RealFunction& f, Order order, int N, const QuadratureRule& rule);

/// Gamma(alpha+1)^{-1} sum_k coeffs[k] L_k^alpha(x).
double synthesize(const LaguerreExpansion& e, double x);

/// Relative gap between Gamma(alpha+1)^{-1} sum_k A_k^alpha coeffs[k]^2 and
/// int |f e^{-x/2}|^2 x^alpha dx. Zero when both sides vanish.
double parseval_defect(const LaguerreExpansion& e, const RealFunction& f, const QuadratureRule& rule);

/// sum_k A_k^{alpha+lambda} |Delta^lambda coeffs|^2 over int |f e^{-x/2}|^2 x^{alpha+lambda} dx,
/// where f is the synthesized expansion. Throws std::domain_error for f = 0.
double pardif_ratio(const LaguerreExpansion& e, double lambda, const QuadratureRule& rule_shifted);

struct LcoeffFit {
  double constant = 0.0;
  double max_residual = 0.0;
};

/// Least-squares C with Delta^lambda hat f_alpha(k) = C hat f_{alpha+lambda}(k)
/// over every k and every polynomial in the bank. The residual is
/// max |a - C b|_inf / |a|_inf per polynomial. Throws IdentityViolation when
/// the residual exceeds tol.
LcoeffFit lcoeff_constant(Order alpha, double lambda, std::span<const Polynomial> testbank,
                          double tol = 1e-6);

struct KernelValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t terms = 0;
};

/// P_r(m)(x) = Gamma(alpha+1)^{-1} sum_k r^k m_k L_k^alpha(x), summed term by
/// term up to a truncation whose bound on |tail| e^{-x/2} is below tol.
KernelValue abel_poisson_kernel(const MultiplierSeq& m, double r, Order order, double x,
                                double tol = 1e-13);

/// Abel-Poisson mean P_r(m) as a damped function, ready for norms.
///
/// Constant and geometric sequences use the generating function
/// sum_k s^k L_k^alpha(x) = (1-s)^{-alpha-1} exp(-x s/(1-s)); everything else
/// is a truncated series whose tail is bounded through |L_k^alpha(x)| e^{-x/2} <= A_k^alpha
/// (alpha >= 0) or <= 2 (alpha < 0).
class AbelPoissonMeans {
 public:
  AbelPoissonMeans(const MultiplierSeq& m, double r, Order order, double tol = 1e-13);

  /// P_r(m)(x) e^{-x/2}.
  SignedLog damped(double x) const;
  double operator()(double x) const;

  /// Past this point the series has left its oscillatory range.
  double x_extent() const noexcept { return x_extent_; }
  /// Number of summed terms; 0 for closed forms.
  std::size_t terms() const noexcept { return coeffs_.size(); }
  double truncation_bound() const noexcept { return truncation_bound_; }

  /// ||P_r(m)||_{L^p_{w(alpha)}}.
  double norm(double p) const;

 private:
  double alpha_;
  double log_gamma_;
  bool closed_form_ = false;
  double closed_scale_ = 0.0;  // m_k = c s^k
  double closed_rho_ = 0.0;    // r s
  std::vector<double> coeffs_;
  double x_extent_ = 0.0;
  double truncation_bound_ = 0.0;
};

inline double abel_poisson_norm(const MultiplierSeq& m, double r, Order order, double p) {
  return AbelPoissonMeans(m, r, order).norm(p);
}

/// Same coefficient vector, tagged with order beta. Requires -1 < beta < alpha.
LaguerreExpansion project_order(const LaguerreExpansion& e, Order beta);

/// Relative defect of the Askey-Fitch identity
/// e^{-x} L_n^beta(x) = Gamma(alpha-beta)^{-1} int_x^inf (y-x)^{alpha-beta-1} e^{-y} L_n^alpha(y) dy,
/// with the integral taken as int_0^inf t^{alpha-beta-1} e^{-t} L_n^alpha(x+t) dt on a
/// Gauss rule of order alpha-beta-1 with 2n+8 nodes. Normalized by e^{-x} max(1, |L_n^beta(x)|).
double projection_check(int n, Order alpha, Order beta, double x);

/// max_k |Delta(m h)_k - m_k Delta h_k - h_{k+1} Delta m_k| / max(1, max_k |Delta(m h)_k|)
/// for finite vectors, zero-extended.
double leibniz_defect(std::span<const double> m, std::span<const double> h);

}  // namespace lagmult

#endif
