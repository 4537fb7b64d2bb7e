#pragma once

#include <stdexcept>
#include <string>

namespace grcf {

/// First digit is undefined at x=0 (Gauss) and x=1 (Renyi).
struct DigitUndefinedError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Requested tolerance cannot be met at the given truncation policy.
struct TruncationError : std::runtime_error {
  double estimate;
  TruncationError(const std::string& msg, double est)
      : std::runtime_error(msg), estimate(est) {}
};

/// Iterative eigen-solve did not converge (spectral gap too small).
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Linear system is numerically singular or badly conditioned.
struct ConditioningError : std::runtime_error {
  double condition_estimate;
  ConditioningError(const std::string& msg, double cond)
      : std::runtime_error(msg), condition_estimate(cond) {}
};

/// Enumeration request exceeds the configured size budget.
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside the numerically supported range.
struct RangeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Two independent quadrature rules disagree beyond tolerance.
struct AccuracyError : std::runtime_error {
  double disagreement;
  AccuracyError(const std::string& msg, double dis)
      : std::runtime_error(msg), disagreement(dis) {}
};

/// A posteriori consistency check failed (e.g. lifted density negative).
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace grcf
