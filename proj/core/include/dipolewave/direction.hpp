#pragma once

#include <cmath>

#include "dipolewave/errors.hpp"
#include "dipolewave/vec3.hpp"

namespace dipolewave::spectra {

/// Propagation direction of a plane-wave component in reciprocal space.
///
/// alpha is the polar angle from the optical axis (+z). beta is the azimuth of
/// the pupil point the ray leaves from. A converging ray therefore travels
/// toward the axis:
///
///     kappa(alpha, beta) = (-sin(alpha) cos(beta), -sin(alpha) sin(beta), cos(alpha))
///
/// With this convention the longitudinal polarization vector
/// (cos a cos b, cos a sin b, sin a) is exactly transverse to kappa.
class Direction {
 public:
  Direction(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || alpha < 0.0 || alpha > pi ||
        beta < 0.0 || beta >= two_pi) {
      throw domain_error("Direction: alpha must lie in [0, pi] and beta in [0, 2 pi)");
    }
  }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  Vec3 unit_vector() const {
    const double sa = std::sin(alpha_);
    return {-sa * std::cos(beta_), -sa * std::sin(beta_), std::cos(alpha_)};
  }

 private:
  double alpha_;
  double beta_;
};

/// Standard circular unit vectors u_0 = z, u_{+-1} = (-+x - i y)/sqrt(2).
struct CircularUnitVector {
  int M;
  CVec3 components;

  static CircularUnitVector make(int M) {
    using namespace std::complex_literals;
    const double r = 1.0 / std::sqrt(2.0);
    switch (M) {
      case 0:
        return {0, CVec3(0.0, 0.0, 1.0)};
      case 1:
        return {1, CVec3(-r, -1i * r, 0.0)};
      case -1:
        return {-1, CVec3(r, -1i * r, 0.0)};
      default:
        throw domain_error("dipole index M must be -1, 0 or +1");
    }
  }
};

}  // namespace dipolewave::spectra
