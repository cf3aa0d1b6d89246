#include "lagmult/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lagmult/random.hpp"

namespace lagmult {

HardyInstance::HardyInstance(std::vector<double> u_, std::vector<double> v_, std::vector<double> a_)
    : u(std::move(u_)), v(std::move(v_)), a(std::move(a_)) {
  if (u.size() != v.size() || u.size() != a.size()) {
    throw std::invalid_argument("Hardy instance sequences must share one length");
  }
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (!(u[k] >= 0.0) || !(v[k] >= 0.0)) throw std::invalid_argument("Hardy weights must be non-negative");
    if (!std::isfinite(u[k]) || !std::isfinite(v[k]) || !std::isfinite(a[k])) {
      throw std::invalid_argument("Hardy instance contains non-finite values");
    }
  }
}

HardyInstance HardyInstance::reversed() const {
  return {std::vector<double>(u.rbegin(), u.rend()), std::vector<double>(v.rbegin(), v.rend()),
          std::vector<double>(a.rbegin(), a.rend())};
}

double HardyResult::ratio() const {
  if (lhs == 0.0) return 0.0;
  const double bound = B * rhs_weighted;
  return bound == 0.0 ? std::numeric_limits<double>::infinity() : lhs / bound;
}

namespace {

double inv(double v) { return v == 0.0 ? 0.0 : 1.0 / v; }

}  // namespace

HardyResult hardy_a(const HardyInstance& inst) {
  const std::size_t L = inst.size();
  HardyResult res;
  double partial = 0.0;
  for (std::size_t k = 0; k < L; ++k) {
    partial += inst.a[k];
    res.lhs += partial * partial * inst.u[k];
    res.rhs_weighted += inst.a[k] * inst.a[k] * inst.v[k];
  }
  // tail_u[N] = sum_{k>=N} u_k, accumulated from the back.
  std::vector<double> tail_u(L + 1, 0.0);
  for (std::size_t k = L; k-- > 0;) tail_u[k] = tail_u[k + 1] + inst.u[k];
  double head_inv = 0.0;
  for (std::size_t N = 0; N < L; ++N) {
    head_inv += inv(inst.v[N]);
    res.B = std::max(res.B, tail_u[N] * head_inv);
  }
  return res;
}

// Written as hardy_a run on the reflected index j = L-1-k, with the same
// summation order, so that hardy_b(x) == hardy_a(x.reversed()) bit for bit.
HardyResult hardy_b(const HardyInstance& inst) {
  const std::size_t L = inst.size();
  HardyResult res;
  double partial = 0.0;
  for (std::size_t j = 0; j < L; ++j) {
    const std::size_t k = L - 1 - j;
    partial += inst.a[k];
    res.lhs += partial * partial * inst.u[k];
    res.rhs_weighted += inst.a[k] * inst.a[k] * inst.v[k];
  }
  std::vector<double> head_u(L + 1, 0.0);
  for (std::size_t j = L; j-- > 0;) head_u[j] = head_u[j + 1] + inst.u[L - 1 - j];
  double tail_inv = 0.0;
  for (std::size_t j = 0; j < L; ++j) {
    tail_inv += inv(inst.v[L - 1 - j]);
    res.B = std::max(res.B, head_u[j] * tail_inv);
  }
  return res;
}

HardyInstance random_hardy_instance(std::uint64_t seed, std::size_t L) {
  Rng rng(seed);
  std::vector<double> u(L), v(L), a(L);
  for (std::size_t k = 0; k < L; ++k) {
    u[k] = std::pow(10.0, rng.uniform(-3.0, 3.0));
    v[k] = std::pow(10.0, rng.uniform(-3.0, 3.0));
    if (rng.unit() < 0.1) v[k] = 0.0;
    a[k] = v[k] == 0.0 ? 0.0 : rng.uniform(-1.0, 1.0);
  }
  return {std::move(u), std::move(v), std::move(a)};
}

}  // namespace lagmult
