#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "generators.hpp"
#include "lagmult/multiplier_norms.hpp"
#include "lagmult/sequences.hpp"
#include "lagmult/special.hpp"
#include "lagmult/spectral.hpp"

namespace lagmult {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Dense oracle for the weighted L^2 gain, built without quadrature: the
// connection formula L_n^a = sum_{j<=n} A_{n-j}^{-lambda-1} L_j^{a+lambda}
// expresses every polynomial in the (a+lambda) basis, whose Gram matrix is
// diag(Gamma(b+1) A_j^b). The gain is the top generalized eigenvalue of
// (C M)^T D (C M) against C^T D C, restricted to columns k0..N-1.
double dense_oracle(const MultiplierSeq& m, double a, double lambda, int N, int k0) {
  const double b = a + lambda;
  const Eigen::Index n = N - k0;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(N, n);
  for (int col = 0; col < n; ++col) {
    const int deg = col + k0;
    for (int j = 0; j <= deg; ++j) C(j, col) = binom_A(deg - j, -lambda - 1.0);
  }
  Eigen::VectorXd D(N);
  for (int j = 0; j < N; ++j) D[j] = std::exp(log_gamma(j + b + 1.0) - log_gamma(j + 1.0));
  Eigen::MatrixXd CM = C;
  for (int col = 0; col < n; ++col) CM.col(col) *= m[static_cast<std::size_t>(col + k0)];
  const Eigen::MatrixXd G = C.transpose() * D.asDiagonal() * C;
  const Eigen::MatrixXd H = CM.transpose() * D.asDiagonal() * CM;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(H, G);
  return std::sqrt(es.eigenvalues().maxCoeff());
}

std::vector<MultiplierSeq> small_bank() {
  return {MultiplierSeq::characteristic(1), MultiplierSeq::characteristic(8), MultiplierSeq::abel(0.9),
          MultiplierSeq::riesz(16, 1.0),   MultiplierSeq::riesz(8, 0.5),      MultiplierSeq::oscillating(2.0)};
}

TEST(ApplyMultiplier, IdentityAndProjection) {
  const LaguerreExpansion e(Order(0.5), {1.0, -2.0, 3.0});
  EXPECT_EQ(apply_multiplier(MultiplierSeq::constant(1.0), e).coeffs, e.coeffs);
  const auto p = apply_multiplier(MultiplierSeq::characteristic(1), e);
  EXPECT_EQ(p.coeffs, (std::vector<double>{1.0, 0.0, 0.0}));
  for (double x : {0.0, 1.0, 9.0}) EXPECT_NEAR(synthesize(p, x), 1.0 / gamma_fn(1.5), 1e-15);
  EXPECT_EQ(p.alpha(), 0.5);
}

TEST(M2Exact, PlancherelSupremum) {
  EXPECT_EQ(m2_norm_exact(MultiplierSeq::constant(-1.5), 10).value, 1.5);
  EXPECT_EQ(m2_norm_exact(MultiplierSeq::abel(0.9), 10).value, 1.0);
  EXPECT_EQ(m2_norm_exact(MultiplierSeq::riesz(10, 2.0), 10).value, 1.0);
  const NormReport r = m2_norm_exact(MultiplierSeq::tabulated({0.1, 0.2, 0.9}), 1);
  EXPECT_EQ(r.kind, NormKind::exact);
  EXPECT_DOUBLE_EQ(r.value, 0.9);
  EXPECT_DOUBLE_EQ(r.residual, 0.7);
}

TEST(SubspaceStart, ExcludedLowModes) {
  EXPECT_EQ(subspace_start(-0.5, 1), 1);
  EXPECT_EQ(subspace_start(-0.9, 1), 1);
  EXPECT_EQ(subspace_start(0.5, 1), 0);
  EXPECT_EQ(subspace_start(0.3, 2), 1);  // k < (l - 1 - alpha)/2 = 0.35
  EXPECT_EQ(subspace_start(2.5, 2), 0);
  EXPECT_EQ(subspace_start(-0.9, 3), 2);
}

TEST(WeightedM2, IdentityHasUnitGain) {
  for (double a : {-0.5, 0.5, 2.7}) {
    const int k0 = subspace_start(a, 1);
    for (int N : {8, 32, 64}) {
      for (double lam : {1.0, 2.0}) {
        const NormReport r = weighted_m2_norm(MultiplierSeq::constant(1.0), Order(a), lam, N, 2000, k0);
        EXPECT_NEAR(r.value, 1.0, 1e-9) << "a=" << a << " N=" << N;
        EXPECT_EQ(r.kind, NormKind::sv_lower);
        EXPECT_TRUE(r.converged);
      }
    }
  }
}

TEST(WeightedM2, MatchesConnectionFormulaOracle) {
  for (const auto& m : small_bank()) {
    for (double a : {-0.5, 0.5, 1.0}) {
      for (double lam : {1.0, 2.0}) {
        const int k0 = subspace_start(a, static_cast<int>(lam));
        const double oracle = dense_oracle(m, a, lam, 64, k0);
        const NormReport r = weighted_m2_norm(m, Order(a), lam, 64, 2000, k0);
        EXPECT_LT(rel(r.value, oracle), 1e-6) << m.spec() << " a=" << a << " lambda=" << lam;
        const Eigen::MatrixXd M = weighted_m2_matrix(m, Order(a), lam, 64, k0);
        const double top = Eigen::JacobiSVD<Eigen::MatrixXd>(M).singularValues()[0];
        EXPECT_LT(rel(top, oracle), 1e-8) << m.spec();
      }
    }
  }
}

TEST(WeightedM2, ProjectionOntoConstantsIsStable) {
  double prev = 0.0;
  for (int N : {16, 32, 64, 128}) {
    const double v = weighted_m2_norm(MultiplierSeq::characteristic(1), Order(0.5), 1.0, N).value;
    EXPECT_GE(v, prev * (1.0 - 1e-12));
    EXPECT_TRUE(std::isfinite(v));
    prev = v;
  }
  // Finite limit: the projection onto constants is bounded on L^2 with weight x^{3/2} e^{-x}.
  EXPECT_LT(prev, 2.0);
}

TEST(WeightedM2Property, NondecreasingInBasisSize) {
  Rng rng(401);
  for (int t = 0; t < 12; ++t) {
    const auto m = testgen::family_member(rng);
    const double a = testgen::order(rng);
    const int k0 = subspace_start(a, 1);
    double prev = 0.0;
    for (int N : {8, 16, 32, 64}) {
      const double v = weighted_m2_norm(m, Order(a), 1.0, N, 2000, k0).value;
      EXPECT_GE(v, prev * (1.0 - 1e-9)) << m.spec() << " a=" << a << " N=" << N;
      prev = v;
    }
  }
}

TEST(WeightedM2, Deterministic) {
  const auto m = MultiplierSeq::oscillating(2.0);
  const NormReport a = weighted_m2_norm(m, Order(1.0), 1.0, 64, 2000, 0, 7);
  const NormReport b = weighted_m2_norm(m, Order(1.0), 1.0, 64, 2000, 0, 7);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(WeightedM2, RejectsBadArguments) {
  const auto one = MultiplierSeq::constant(1.0);
  EXPECT_THROW(weighted_m2_matrix(one, Order(0.5), 0.0, 16), std::domain_error);
  EXPECT_THROW(weighted_m2_matrix(one, Order(0.5), 1.0, 16, 16), std::invalid_argument);
  EXPECT_THROW(weighted_m2_norm(one, Order(0.5), 1.0, 16, 0), std::invalid_argument);
}

TEST(WeightedM2, BothDirectionsAgainstWbv) {
  // Two-sided comparability on a bank: neither norm exceeds 50 times the other.
  for (double a : {0.5, 1.0, 2.7}) {
    for (const auto& m : small_bank()) {
      const double sv = weighted_m2_norm(m, Order(a), 1.0, 64).value;
      const double wbv = wbv_norm(m, 2.0, 1.0, 1024).norm;
      EXPECT_LE(sv, 50.0 * wbv) << m.spec();
      EXPECT_LE(wbv, 50.0 * sv) << m.spec();
    }
  }
}

TEST(RGrid, ShapeAndRange) {
  const auto g = default_r_grid();
  ASSERT_EQ(g.size(), 20u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_LT(g.back(), 0.999);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  const auto g2 = default_r_grid(2);
  EXPECT_EQ(g2.size(), 39u);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g2[2 * i], g[i]);
}

TEST(MpInfty, ConstantMultiplierCurve) {
  for (double a : {0.0, 1.0, 2.0}) {
    const NormReport r = mpinfty_norm(MultiplierSeq::constant(1.0), 1.0, Order(a), default_r_grid());
    EXPECT_LT(rel(r.value, std::pow(2.0, a + 1.0)), 1e-9);
    EXPECT_EQ(r.curve.front().first, 0.0);
    for (const auto& [rr, v] : r.curve) EXPECT_LT(rel(v, std::pow((1.0 + rr) / 2.0, -a - 1.0)), 1e-9) << rr;
  }
  EXPECT_LT(rel(mpinfty_norm(MultiplierSeq::constant(1.0), 1.0, Order(0.0), default_r_grid()).value, 2.0), 1e-9);
}

TEST(MpInfty, MeansOfAPolynomialApproachItsNorm) {
  // m = coefficients of g = L_2^1: P_r(m) = r^2 g, and ||g||_{L^1_{w(1)}} = 16.5058105... (40-digit quadrature split at the roots).
  std::vector<double> c(3, 0.0);
  c[2] = gamma_fn(2.0);
  const NormReport r = mpinfty_norm(MultiplierSeq::tabulated(c), 1.0, Order(1.0), default_r_grid());
  const double g_norm = 16.505810519461476550;
  for (std::size_t i = 1; i < r.curve.size(); ++i) EXPECT_GT(r.curve[i].second, r.curve[i - 1].second);
  const double r_last = r.curve.back().first;
  EXPECT_LT(rel(r.value, r_last * r_last * g_norm), 1e-8);
}

TEST(MpInfty, ZeroAndDomain) {
  EXPECT_EQ(mpinfty_norm(MultiplierSeq::constant(0.0), 2.0, Order(1.0), default_r_grid()).value, 0.0);
  EXPECT_THROW(mpinfty_norm(MultiplierSeq::constant(1.0), 1.0, Order(-0.5), default_r_grid()), std::domain_error);
  EXPECT_THROW(mpinfty_norm(MultiplierSeq::constant(1.0), 1.0, Order(1.0), {0.9995}), std::domain_error);
}

TEST(MpqLowerBound, IdentityReachesOne) {
  for (double p : {1.0, 4.0 / 3.0, 2.0, 4.0}) {
    const SpaceParams s(p, 1.0);
    const NormReport r = mpq_lower_bound(MultiplierSeq::constant(1.0), s, s, Order(1.0), 8, 1);
    EXPECT_GE(r.value, 1.0 - 1e-9);
    EXPECT_LE(r.value, 1.0 + 1e-9);
  }
}

TEST(MpqLowerBound, PlancherelOnSingleModes) {
  Rng rng(402);
  for (int t = 0; t < 10; ++t) {
    const auto m = testgen::family_member(rng);
    const double a = testgen::order(rng);
    const SpaceParams s(2.0, a);
    const NormReport r = mpq_lower_bound(m, s, s, Order(a), 8, 3);
    double head = 0.0;
    for (std::size_t k = 0; k <= 64; ++k) head = std::max(head, std::abs(m[k]));
    EXPECT_NEAR(r.detail("single"), head, 1e-10 * std::max(1.0, head)) << m.spec();
    EXPECT_LE(r.value, m2_norm_exact(m, 64).value * (1.0 + 1e-9)) << m.spec();
  }
}

TEST(MpqLowerBound, ProjectionOntoConstants) {
  const SpaceParams s(2.0, 0.5);
  const NormReport r = mpq_lower_bound(MultiplierSeq::characteristic(1), s, s, Order(0.5), 16, 5);
  EXPECT_LT(rel(r.value, 1.0), 0.05);
  EXPECT_THROW(r.detail("missing"), std::out_of_range);
}

TEST(MpqLowerBound, DeterministicGivenSeed) {
  const SpaceParams from(4.0 / 3.0, 2.0), to(1.5, 1.0);
  const auto m = MultiplierSeq::riesz(16, 0.5);
  EXPECT_EQ(mpq_lower_bound(m, from, to, Order(2.0), 16, 9).value, mpq_lower_bound(m, from, to, Order(2.0), 16, 9).value);
  EXPECT_THROW(mpq_lower_bound(m, from, to, Order(2.0), 0, 9), std::invalid_argument);
}

TEST(AdjointDuality, SelfDualPoint) {
  const DualityReport d = adjoint_duality_check(MultiplierSeq::riesz(8, 1.0), 2.0, 1.0, Order(1.0), 8, 2);
  EXPECT_DOUBLE_EQ(d.p_dual, 2.0);
  EXPECT_DOUBLE_EQ(d.gamma_dual, 1.0);
  EXPECT_NEAR(d.ratio, 1.0, 1e-12);
}

TEST(AdjointDuality, IdentityAndGeometric) {
  const DualityReport one = adjoint_duality_check(MultiplierSeq::constant(1.0), 1.5, 0.5, Order(1.0), 8, 2);
  EXPECT_GE(one.ratio, 0.9);
  EXPECT_LE(one.ratio, 1.1);
  const DualityReport g = adjoint_duality_check(MultiplierSeq::abel(0.9), 4.0 / 3.0, 1.0, Order(1.0), 16, 2);
  EXPECT_GE(g.ratio, 1.0 / 20.0);
  EXPECT_LE(g.ratio, 20.0);
  EXPECT_THROW(adjoint_duality_check(MultiplierSeq::constant(1.0), 1.0, 0.0, Order(1.0), 8, 2), std::domain_error);
  EXPECT_THROW(adjoint_duality_check(MultiplierSeq::constant(1.0), 2.0, 3.5, Order(1.0), 8, 2), std::domain_error);
}

}  // namespace
}  // namespace lagmult
