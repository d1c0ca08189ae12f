#pragma once

#include <limits>

namespace dipolewave {

/// Result of a point evaluation inside a sweep. Poles and vanishing-flux
/// points are tagged instead of thrown so a sweep can run to completion.
struct Outcome {
  enum class Kind { finite, infinite, undefined };

  Kind kind = Kind::finite;
  double value = 0.0;

  static Outcome finite(double v) { return {Kind::finite, v}; }
  static Outcome infinite() { return {Kind::infinite, std::numeric_limits<double>::infinity()}; }
  static Outcome undefined() { return {Kind::undefined, std::numeric_limits<double>::quiet_NaN()}; }

  bool is_finite() const { return kind == Kind::finite; }
};

}  // namespace dipolewave
