#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "lagmult/hardy.hpp"
#include "lagmult/random.hpp"

namespace lagmult {
namespace {

// Best constant of the finite forward inequality: largest eigenvalue of
// S^T U S against V, with S the lower-triangular summation matrix. Only
// indices with v_k > 0 take part (a_k = 0 elsewhere).
double sharp_constant(const HardyInstance& inst) {
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    if (inst.v[k] > 0.0) live.push_back(k);
  }
  const auto L = static_cast<Eigen::Index>(inst.size());
  const auto n = static_cast<Eigen::Index>(live.size());
  if (n == 0) return 0.0;
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(L, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = static_cast<Eigen::Index>(live[static_cast<std::size_t>(c)]); r < L; ++r) S(r, c) = 1.0;
  }
  Eigen::VectorXd u(L), v(n);
  for (Eigen::Index k = 0; k < L; ++k) u[k] = inst.u[static_cast<std::size_t>(k)];
  for (Eigen::Index c = 0; c < n; ++c) v[c] = inst.v[live[static_cast<std::size_t>(c)]];
  // Symmetric form V^{-1/2} S^T U S V^{-1/2}.
  const Eigen::VectorXd vs = v.cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd K = vs.asDiagonal() * (S.transpose() * u.asDiagonal() * S) * vs.asDiagonal();
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(K, Eigen::EigenvaluesOnly).eigenvalues().maxCoeff();
}

TEST(HardyInstance, Validation) {
  EXPECT_THROW(HardyInstance({1.0}, {1.0, 2.0}, {0.0}), std::invalid_argument);
  EXPECT_THROW(HardyInstance({-1.0}, {1.0}, {0.0}), std::invalid_argument);
  EXPECT_THROW(HardyInstance({1.0}, {1.0}, {NAN}), std::invalid_argument);
}

TEST(HardyA, ZeroWeightGivesZero) {
  const HardyInstance inst({0.0, 0.0, 0.0}, {1.0, 2.0, 3.0}, {1.0, -1.0, 4.0});
  EXPECT_EQ(hardy_a(inst).lhs, 0.0);
  EXPECT_EQ(hardy_b(inst).lhs, 0.0);
  EXPECT_EQ(hardy_a(inst).ratio(), 0.0);
}

TEST(HardyA, FirstEntryOnly) {
  const std::size_t L = 50;
  std::vector<double> u(L), v(L, 1.0), a(L, 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < L; ++k) total += u[k] = 1.0 / ((k + 1.0) * (k + 1.0));
  a[0] = 1.0;
  const HardyResult r = hardy_a(HardyInstance(u, v, a));
  EXPECT_NEAR(r.lhs, total, 1e-15);
  EXPECT_GE(r.B, total);
  EXPECT_EQ(r.rhs_weighted, 1.0);
  EXPECT_LE(r.lhs, r.B * r.rhs_weighted);
}

TEST(HardyB, LastEntryOnly) {
  const HardyInstance inst({0.5, 0.25, 2.0}, {1.0, 1.0, 4.0}, {0.0, 0.0, 1.0});
  const HardyResult r = hardy_b(inst);
  EXPECT_DOUBLE_EQ(r.lhs, 2.75);
  EXPECT_DOUBLE_EQ(r.rhs_weighted, 4.0);
  // max_N (sum_{k<=N} u)(sum_{k>=N} 1/v): N=0: 0.5*2.25, N=1: 0.75*1.25, N=2: 2.75*0.25.
  EXPECT_DOUBLE_EQ(r.B, 1.125);
}

TEST(HardyA, ZeroWeightsHaveZeroInverse) {
  // v_1 = 0 reads as 1/v_1 = 0 in B and drops a_1 from the right side.
  const HardyInstance inst({1.0, 1.0, 1.0}, {1.0, 0.0, 2.0}, {1.0, 5.0, 1.0});
  const HardyResult r = hardy_a(inst);
  EXPECT_DOUBLE_EQ(r.rhs_weighted, 3.0);
  EXPECT_DOUBLE_EQ(r.B, 3.0);  // N=0: 3*1, N=1: 2*1, N=2: 1*1.5
  EXPECT_DOUBLE_EQ(r.lhs, 1.0 + 36.0 + 49.0);
  EXPECT_GT(r.lhs, 4.0 * r.B * r.rhs_weighted);  // the mass a_1 is invisible to the right side
}

TEST(Hardy, DegenerateLengthOne) {
  const HardyResult r = hardy_a(HardyInstance({2.0}, {0.5}, {3.0}));
  EXPECT_DOUBLE_EQ(r.lhs, 18.0);
  EXPECT_DOUBLE_EQ(r.B, 4.0);
  EXPECT_DOUBLE_EQ(r.rhs_weighted, 4.5);
  EXPECT_DOUBLE_EQ(r.ratio(), 1.0);
  const HardyResult z = hardy_a(HardyInstance({2.0}, {0.0}, {0.0}));
  EXPECT_EQ(z.ratio(), 0.0);
  const HardyResult inf = hardy_a(HardyInstance({2.0}, {0.0}, {1.0}));
  EXPECT_TRUE(std::isinf(inf.ratio()));
}

TEST(HardyProperty, ReversalDualityIsExact) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = random_hardy_instance(seed, 1 + seed % 97);
    const HardyResult b = hardy_b(inst);
    const HardyResult a = hardy_a(inst.reversed());
    EXPECT_EQ(a.lhs, b.lhs) << seed;
    EXPECT_EQ(a.B, b.B) << seed;
    EXPECT_EQ(a.rhs_weighted, b.rhs_weighted) << seed;
  }
}

TEST(HardyProperty, ScalingCovariance) {
  Rng rng(501);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto inst = random_hardy_instance(seed, 64);
    const HardyResult r = hardy_a(inst);
    const double t = rng.uniform(-5.0, 5.0);
    for (auto& x : inst.a) x *= t;
    const HardyResult s = hardy_a(inst);
    EXPECT_EQ(s.B, r.B);
    EXPECT_NEAR(s.lhs, t * t * r.lhs, 1e-13 * t * t * r.lhs);
    EXPECT_NEAR(s.rhs_weighted, t * t * r.rhs_weighted, 1e-13 * t * t * r.rhs_weighted);
  }
}

TEST(HardyProperty, FactorFourOnRandomInstances) {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto inst = random_hardy_instance(seed, 256);
    for (const HardyResult& r : {hardy_a(inst), hardy_b(inst)}) {
      EXPECT_LE(r.lhs, 4.0 * r.B * r.rhs_weighted) << "seed " << seed;
      worst = std::max(worst, r.ratio());
    }
  }
  EXPECT_LT(worst, 4.0);
}

TEST(HardyProperty, SharpConstantStaysBelowFourB) {
  // The worst a for given weights, from the eigenproblem, against the supremum functional.
  Rng rng(502);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = random_hardy_instance(seed, static_cast<std::size_t>(rng.uniform_int(1, 40)));
    const double B = hardy_a(inst).B;
    const double C = sharp_constant(inst);
    EXPECT_LE(C, 4.0 * B * (1.0 + 1e-10)) << "seed " << seed;
  }
}

TEST(HardyProperty, PowerWeightsApproachTheBound) {
  // u_k = (k+1)^{-2}, v = 1 is the classical near-extremal pair; the ratio
  // C/B creeps up with L but must stay under 4.
  double prev = 0.0;
  for (std::size_t L : {16u, 64u, 256u}) {
    std::vector<double> u(L), v(L, 1.0), a(L, 0.0);
    for (std::size_t k = 0; k < L; ++k) u[k] = 1.0 / ((k + 1.0) * (k + 1.0));
    const HardyInstance inst(u, v, a);
    const double ratio = sharp_constant(inst) / hardy_a(inst).B;
    EXPECT_GT(ratio, prev);
    EXPECT_LT(ratio, 4.0);
    prev = ratio;
  }
  EXPECT_GT(prev, 1.0);
}

TEST(RandomHardyInstance, Conventions) {
  const auto inst = random_hardy_instance(42, 1000);
  ASSERT_EQ(inst.size(), 1000u);
  int zeros = 0;
  for (std::size_t k = 0; k < inst.size(); ++k) {
    EXPECT_GE(inst.u[k], 0.0);
    if (inst.v[k] == 0.0) {
      ++zeros;
      EXPECT_EQ(inst.a[k], 0.0);
    } else {
      EXPECT_GE(inst.v[k], 1e-3);
      EXPECT_LE(inst.v[k], 1e3);
    }
  }
  EXPECT_GT(zeros, 50);
  EXPECT_LT(zeros, 150);
  const auto again = random_hardy_instance(42, 1000);
  EXPECT_EQ(again.u, inst.u);
  EXPECT_EQ(again.a, inst.a);
}

}  // namespace
}  // namespace lagmult
