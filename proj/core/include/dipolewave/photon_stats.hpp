#pragma once

#include "dipolewave/outcome.hpp"
#include "dipolewave/vec3.hpp"

namespace dipolewave::stats {

/// D = u_K.eps - (u_K.R)(R.eps): the dipole radiation amplitude seen by a
/// detector at direction R analyzing polarization eps. Products are
/// bilinear, as in eps . E^(+).
complex dipole_projection(int K, const Vec3& r_hat, const CVec3& eps_hat);

/// A far-field detector: direction, analyzed polarization, the dipole index
/// of the atomic transition and the aggregate non-dipole factor P >= 0.
class DetectionChannel {
 public:
  DetectionChannel(int K, const Vec3& r_hat, const CVec3& eps_hat, double p_factor);

  int K() const { return K_; }
  const Vec3& r_hat() const { return r_hat_; }
  const CVec3& eps_hat() const { return eps_hat_; }
  double p_factor() const { return p_factor_; }
  complex d_factor() const { return dipole_projection(K_, r_hat_, eps_hat_); }

  /// K = 0 dipole viewed from the side (R = x, eps = z), so D = 1.
  static DetectionChannel side_view(double p_factor = 1.0);

 private:
  int K_;
  Vec3 r_hat_;
  CVec3 eps_hat_;
  double p_factor_;
};

struct EtaParameter {
  complex eta;
};

/// eta from D eta beta = P alpha + D beta. Throws undefined_error if D beta = 0.
EtaParameter eta_from_amplitudes(const DetectionChannel& channel, complex alpha_amp, complex beta);

struct WeakFlux {
  double flux;   // F = |D|^2 |beta|^2 |eta - 2|^2
  double ratio;  // F / F0 = |eta - 2|^2, with F0 = |D beta|^2
};

/// Weak on-resonance flux. Staying in the weak regime is the caller's job.
WeakFlux weak_drive_flux(const DetectionChannel& channel, complex beta, complex eta);

/// g2(0) = |eta|^2 |eta - 4|^2 / |eta - 2|^4. Throws divergence_error at eta = 2.
double weak_drive_g2(complex eta);

/// Same, but reports the pole as Outcome::infinite().
Outcome weak_drive_g2_tagged(complex eta);

/// ((1 - 2/|eta|)^2 + s) / (1 + s): resonant flux in units of |D eta beta|^2.
double resonant_flux_ratio(double abs_eta, double s);

/// Correspondence with the one-dimensional model: incident flux R <-> |eta||beta|^2
/// and gamma_S/gamma <-> 1/|eta|.
///
/// The correspondence is only faithful for real eta >= 1, since there
/// 0 <= 2 gamma_S/gamma <= 2 while eta is complex in general. The map is
/// returned as is; `faithful` flags the valid region.
struct CarmichaelParams {
  double incident_flux;
  double coupling_ratio;
  bool faithful;
};

CarmichaelParams carmichael_map(complex eta, complex beta);

}  // namespace dipolewave::stats
