#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Core>

namespace dipolewave {

using complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Eigen's dot() conjugates its left operand. The field algebra here uses
// the plain bilinear product a.b = sum a_i b_i; hermitian_dot is a*.b.
inline complex bilinear_dot(const CVec3& a, const CVec3& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

inline complex bilinear_dot(const CVec3& a, const Vec3& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

inline complex hermitian_dot(const CVec3& a, const CVec3& b) {
  return std::conj(a(0)) * b(0) + std::conj(a(1)) * b(1) + std::conj(a(2)) * b(2);
}

inline double squared_norm(const CVec3& a) { return a.squaredNorm(); }

}  // namespace dipolewave
