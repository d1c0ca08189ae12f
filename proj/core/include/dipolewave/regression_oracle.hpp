#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "dipolewave/bloch.hpp"
#include "dipolewave/outcome.hpp"
#include "dipolewave/photon_stats.hpp"
#include "dipolewave/vec3.hpp"

namespace dipolewave::oracle {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

/// Atomic density matrix in the basis {|g>, |e>}.
class DensityMatrix2 {
 public:
  explicit DensityMatrix2(const Matrix2c& entries);

  static DensityMatrix2 ground();
  static DensityMatrix2 from_bloch(const bloch::BlochState& state);

  const Matrix2c& entries() const { return rho_; }
  complex sm() const { return rho_(1, 0); }  // Tr(sigma^- rho)
  double sz() const { return (rho_(1, 1) - rho_(0, 0)).real(); }
  double excited_population() const { return rho_(1, 1).real(); }
  bloch::BlochState bloch() const { return {sm(), sz()}; }

  /// Max deviation from Hermiticity, |trace - 1|, and the smallest eigenvalue.
  double hermiticity_error() const;
  double trace_error() const;
  double min_eigenvalue() const;

 private:
  Matrix2c rho_;
};

/// Column-major vectorization: vec(rho) = (rho_gg, rho_eg, rho_ge, rho_ee).
Vector4c vectorize(const Matrix2c& rho);
Matrix2c unvectorize(const Vector4c& v);

/// Generator of the driven, damped two-level master equation
///
///     d rho/dt = -i[H, rho] + Gamma (s- rho s+ - {s+ s-, rho}/2)
///     H = -Delta s+ s- + i sqrt(Gamma) (beta* s- - beta s+)
///
/// whose expectation values obey the optical Bloch equations.
struct LiouvillianMap {
  Matrix4c matrix;
  double gamma;
  double detuning;
  complex beta;

  Matrix2c apply(const Matrix2c& rho) const { return unvectorize(matrix * vectorize(rho)); }
  Matrix2c propagate(const Matrix2c& rho, double tau) const;
};

LiouvillianMap build_liouvillian(const bloch::AtomParams& atom, const bloch::DriveAmplitude& drive);

/// Null vector of the generator with unit trace.
DensityMatrix2 steady_density(const LiouvillianMap& L);

/// F = <C+ C> for C = D eta beta + D sqrt(Gamma) sigma^-, in steady state.
double flux_exact(const stats::DetectionChannel& channel, complex eta,
                  const bloch::DriveAmplitude& drive, const bloch::AtomParams& atom);

/// F / F0 with F0 = |D beta|^2.
double flux_ratio_exact(const stats::DetectionChannel& channel, complex eta,
                        const bloch::DriveAmplitude& drive, const bloch::AtomParams& atom);

/// Normalized intensity correlation g2(tau) by the quantum regression rule:
/// the conditional state C rho_ss C+ is propagated for tau and C+ C is
/// measured on it. Throws undefined_error when F/F0 < 1e-8.
double g2_exact(const stats::DetectionChannel& channel, complex eta,
                const bloch::DriveAmplitude& drive, const bloch::AtomParams& atom, double tau);

/// g2 at several delays, sharing one steady-state solve. Entries are
/// Outcome::undefined() below the flux threshold.
std::vector<Outcome> g2_exact_curve(const stats::DetectionChannel& channel, complex eta,
                                    const bloch::DriveAmplitude& drive,
                                    const bloch::AtomParams& atom, std::span<const double> taus);

/// Max over the grid of |g2_exact(s = 1e-4, tau = 0) - g2_weak(eta)| / max(g2_weak, 1)
/// on resonance. Grid points with |eta - 2| < 0.1 are rejected.
double g2_weak_limit_check(std::span<const complex> eta_grid);

inline constexpr double kUndefinedFluxRatio = 1e-8;

}  // namespace dipolewave::oracle
