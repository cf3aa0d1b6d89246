#ifndef LAGMULT_TESTS_GENERATORS_HPP
#define LAGMULT_TESTS_GENERATORS_HPP

// Seeded generators for the property tests. Every test owns its Rng, so a
// failing case can be replayed from the seed printed in the assertion.

#include <cmath>
#include <cstdint>
#include <vector>

#include "lagmult/expansion.hpp"
#include "lagmult/random.hpp"
#include "lagmult/sequences.hpp"

namespace lagmult::testgen {

inline double order(Rng& rng) {
  static constexpr double kOrders[] = {-0.5, 0.0, 0.5, 1.0, 2.7};
  return kOrders[rng.uniform_int(0, 4)];
}

// Coefficients shrink like 1/j! so the monomial sum stays well conditioned.
inline Polynomial polynomial(Rng& rng, int degree) {
  Polynomial f;
  double fact = 1.0;
  for (int j = 0; j <= degree; ++j) {
    if (j > 0) fact *= j;
    f.coeffs.push_back(rng.uniform(-1.0, 1.0) / fact);
  }
  return f;
}

inline std::vector<double> vector(Rng& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

inline MultiplierSeq tabulated(Rng& rng, std::size_t n) { return MultiplierSeq::tabulated(vector(rng, n)); }

/// One member of each closed-form family with random parameters.
inline MultiplierSeq family_member(Rng& rng) {
  switch (rng.uniform_int(0, 4)) {
    case 0:
      return MultiplierSeq::constant(rng.uniform(-2.0, 2.0));
    case 1:
      return MultiplierSeq::abel(rng.uniform(0.0, 0.95));
    case 2:
      return MultiplierSeq::riesz(static_cast<int>(rng.uniform_int(1, 40)), rng.uniform(0.3, 3.0));
    case 3:
      return MultiplierSeq::characteristic(static_cast<int>(rng.uniform_int(1, 40)));
    default:
      return MultiplierSeq::tabulated(vector(rng, static_cast<std::size_t>(rng.uniform_int(1, 30))));
  }
}

}  // namespace lagmult::testgen

#endif
