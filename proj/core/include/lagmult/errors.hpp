#ifndef LAGMULT_ERRORS_HPP
#define LAGMULT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lagmult {

/// Floating point trouble: overflow, non-finite samples, solver failure.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series truncation could not meet the requested tolerance.
class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A numerically checked identity failed its threshold. Signals a bug upstream.
class IdentityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lagmult

#endif
