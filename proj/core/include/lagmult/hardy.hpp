#ifndef LAGMULT_HARDY_HPP
#define LAGMULT_HARDY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lagmult {

/// Finite data for the discrete two-weight Hardy inequalities. u, v >= 0 and
/// all three sequences share one length; 1/v_k is read as 0 where v_k = 0.
struct HardyInstance {
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> a;

  HardyInstance(std::vector<double> u_, std::vector<double> v_, std::vector<double> a_);
  std::size_t size() const noexcept { return u.size(); }
  HardyInstance reversed() const;
};

struct HardyResult {
  double lhs = 0.0;
  double B = 0.0;
  double rhs_weighted = 0.0;

  /// lhs / (B rhs_weighted); 0 when lhs = 0, infinite when only the bound vanishes.
  double ratio() const;
};

/// lhs = sum_k |sum_{j<=k} a_j|^2 u_k, B = max_N (sum_{k>=N} u_k)(sum_{k<=N} 1/v_k),
/// rhs_weighted = sum_j |a_j|^2 v_j.
HardyResult hardy_a(const HardyInstance& inst);

/// Mirror image: tails sum_{j>=k} a_j and B = max_N (sum_{k<=N} u_k)(sum_{k>=N} 1/v_k).
HardyResult hardy_b(const HardyInstance& inst);

/// u, v log-uniform over six decades with about one v in ten set to zero, and
/// a_k uniform in [-1, 1] except a_k = 0 where v_k = 0 (otherwise the right
/// side cannot see a_k and no constant works).
HardyInstance random_hardy_instance(std::uint64_t seed, std::size_t L = 256);

}  // namespace lagmult

#endif
