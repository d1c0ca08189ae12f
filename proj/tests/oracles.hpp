#pragma once

// Test-only reference integrals. These use Boost's tanh-sinh rule and a
// plain trapezoid in beta, so they share no code with the library's
// graded Gauss-Legendre grid.

#include <cmath>
#include <functional>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "dipolewave/direction.hpp"
#include "dipolewave/vec3.hpp"

namespace dipolewave::testing {

/// 2 pi * integral_0^theta sin(alpha) f(alpha) d alpha
inline double polar_reference(const std::function<double(double)>& f, double theta) {
  boost::math::quadrature::tanh_sinh<double> rule;
  auto g = [&](double a) { return std::sin(a) * f(a); };
  if (theta <= pi / 2) return two_pi * rule.integrate(g, 0.0, theta);
  return two_pi * (rule.integrate(g, 0.0, pi / 2) + rule.integrate(g, pi / 2, theta));
}

/// integral over beta in [0, 2pi), alpha in [0, theta] of sin(alpha) f.
/// Trapezoid in beta is exact for the low-order trig polynomials used here.
inline complex cap_reference(const std::function<complex(const spectra::Direction&)>& f,
                             double theta, int n_beta = 64) {
  boost::math::quadrature::tanh_sinh<double> rule;
  const double h = two_pi / n_beta;
  auto part = [&](auto pick) {
    auto g = [&](double a) {
      double row = 0.0;
      for (int j = 0; j < n_beta; ++j) row += pick(f(spectra::Direction(a, h * j)));
      return std::sin(a) * row * h;
    };
    if (theta <= pi / 2) return rule.integrate(g, 0.0, theta);
    return rule.integrate(g, 0.0, pi / 2) + rule.integrate(g, pi / 2, theta);
  };
  return {part([](complex z) { return z.real(); }), part([](complex z) { return z.imag(); })};
}

}  // namespace dipolewave::testing
