#pragma once

#include <stdexcept>
#include <string>

namespace dipolewave {

/// Argument outside the mathematical domain of an operation (bad angle,
/// invalid dipole index, ...). The CLI maps this to exit code 2.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller broke a documented precondition on an otherwise valid type,
/// e.g. passing an unnormalized spectrum or a non-unit detector direction.
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Floating point trouble: non-finite integrand, singular solve, Bloch-ball
/// escape during integration. The CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closed form evaluated at its pole (g2 at eta = 2, eta gap at p = 0).
class divergence_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

/// Correlation requested where the detected flux vanishes.
class undefined_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

}  // namespace dipolewave
