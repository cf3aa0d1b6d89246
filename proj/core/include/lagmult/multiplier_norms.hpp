#ifndef LAGMULT_MULTIPLIER_NORMS_HPP
#define LAGMULT_MULTIPLIER_NORMS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lagmult/expansion.hpp"
#include "lagmult/lp_norm.hpp"
#include "lagmult/sequences.hpp"

namespace lagmult {

enum class NormKind { exact, sv_lower, pr_characterization, search_lower };

std::string_view to_string(NormKind kind);

struct NormReport {
  NormKind kind = NormKind::exact;
  double value = 0.0;

  double p = 2.0;
  double q = 2.0;
  double alpha = 0.0;
  double gamma = 0.0;
  double delta = 0.0;

  std::size_t basis_size = 0;
  std::size_t iterations = 0;
  std::size_t r_grid_size = 0;
  double residual = 0.0;
  bool converged = true;

  /// (r, ||P_r(m)||) for the Abel-Poisson estimator.
  std::vector<std::pair<double, double>> curve;
  /// Named partial results, e.g. the best ratio per candidate class.
  std::vector<std::pair<std::string, double>> details;

  double detail(std::string_view name) const;
};

/// Coefficients m_k hat f(k), same order.
LaguerreExpansion apply_multiplier(const MultiplierSeq& m, const LaguerreExpansion& e);

/// ||m||_{M^2_{alpha;alpha}} = sup_k |m_k|. The family supremum is exact; the
/// residual is how far the head 0..K falls short of it.
NormReport m2_norm_exact(const MultiplierSeq& m, std::size_t K);

/// First index kept when the operator lives on {hat f_alpha(k) = 0 for k < k0}:
/// k0 = ceil((l - 1 - alpha) / 2) when positive, else 0.
int subspace_start(double alpha, int l);

/// Matrix of T_m restricted to polynomials of degree < N in span{p_k^alpha, k >= k0},
/// with the L^2_{w(alpha+lambda)} norm on both sides: its singular values are the
/// gains of T_m on that subspace. Built from Gauss rules of orders alpha and
/// alpha+lambda, both exact at this degree.
Eigen::MatrixXd weighted_m2_matrix(const MultiplierSeq& m, Order alpha, double lambda, int N, int k0 = 0);

/// Largest singular value of weighted_m2_matrix by power iteration on M^T M,
/// at most 2*iters steps from a seeded random start. Lower bound for
/// ||m||_{M^2_{alpha+lambda;alpha+lambda}} with respect to order alpha.
NormReport weighted_m2_norm(const MultiplierSeq& m, Order alpha, double lambda, int N, int iters = 2000,
                            int k0 = 0, std::uint64_t seed = 0x5eed);

/// r_j = 1 - 2^{-j/(2 density)}, j = 0..19 density, so r stays below 0.999.
std::vector<double> default_r_grid(int density = 1);

/// max over the grid of ||P_r(m)||_{L^p_{w(alpha)}}; alpha >= 0, r <= 0.999.
NormReport mpinfty_norm(const MultiplierSeq& m, double p, Order alpha, const std::vector<double>& r_grid);

/// Largest ||T_m f||_{to} / ||f||_{from} over a fixed candidate recipe of order-alpha
/// polynomials: single modes k <= 64, dyadic blocks, Abel means r^k and `trials`
/// random draws of degree <= 64. Deterministic given seed. Details hold the best
/// ratio per class: "single", "block", "abel", "random".
NormReport mpq_lower_bound(const MultiplierSeq& m, const SpaceParams& from, const SpaceParams& to, Order alpha,
                           int trials, std::uint64_t seed);

struct DualityReport {
  NormReport primal;
  NormReport dual;
  double p_dual = 0.0;
  double gamma_dual = 0.0;
  double ratio = 0.0;
};

/// Lower bounds on M^p_{alpha;gamma} and M^{p'}_{alpha;alpha p' - gamma p'/p} from
/// the same candidates. Needs 1 < p < inf and -1 < gamma < p(alpha+1) - 1.
DualityReport adjoint_duality_check(const MultiplierSeq& m, double p, double gamma, Order alpha, int trials,
                                    std::uint64_t seed);

}  // namespace lagmult

#endif
