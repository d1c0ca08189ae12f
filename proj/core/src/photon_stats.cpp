#include "dipolewave/photon_stats.hpp"

#include <cmath>

#include "dipolewave/direction.hpp"
#include "dipolewave/errors.hpp"

namespace dipolewave::stats {

namespace {

constexpr double kUnitTol = 1e-12;

void check_geometry(const Vec3& r_hat, const CVec3& eps_hat) {
  if (!r_hat.allFinite() || std::abs(r_hat.norm() - 1.0) > kUnitTol) {
    throw contract_violation("detector direction R must be a unit vector");
  }
  if (!eps_hat.allFinite() || std::abs(eps_hat.norm() - 1.0) > kUnitTol) {
    throw contract_violation("analyzed polarization eps must have unit norm");
  }
  if (std::abs(bilinear_dot(eps_hat, r_hat)) > kUnitTol) {
    throw contract_violation("analyzed polarization eps must be transverse to R");
  }
}

}  // namespace

complex dipole_projection(int K, const Vec3& r_hat, const CVec3& eps_hat) {
  check_geometry(r_hat, eps_hat);
  const CVec3 u = spectra::CircularUnitVector::make(K).components;
  return bilinear_dot(u, eps_hat) - bilinear_dot(u, r_hat) * bilinear_dot(eps_hat, r_hat);
}

DetectionChannel::DetectionChannel(int K, const Vec3& r_hat, const CVec3& eps_hat, double p_factor)
    : K_(K), r_hat_(r_hat), eps_hat_(eps_hat), p_factor_(p_factor) {
  spectra::CircularUnitVector::make(K);
  check_geometry(r_hat, eps_hat);
  if (!std::isfinite(p_factor) || p_factor < 0.0) {
    throw domain_error("DetectionChannel: P must be finite and >= 0");
  }
}

DetectionChannel DetectionChannel::side_view(double p_factor) {
  return DetectionChannel(0, Vec3(1.0, 0.0, 0.0), CVec3(0.0, 0.0, 1.0), p_factor);
}

EtaParameter eta_from_amplitudes(const DetectionChannel& channel, complex alpha_amp, complex beta) {
  const complex d_beta = channel.d_factor() * beta;
  if (d_beta == complex(0.0, 0.0)) {
    throw undefined_error("eta is undefined: the detector does not see the dipole channel (D beta = 0)");
  }
  return {(channel.p_factor() * alpha_amp + d_beta) / d_beta};
}

WeakFlux weak_drive_flux(const DetectionChannel& channel, complex beta, complex eta) {
  const double ratio = std::norm(eta - 2.0);
  return {std::norm(channel.d_factor()) * std::norm(beta) * ratio, ratio};
}

Outcome weak_drive_g2_tagged(complex eta) {
  const double gap = std::norm(eta - 2.0);
  if (gap == 0.0) return Outcome::infinite();
  const double g2 = std::norm(eta) * std::norm(eta - 4.0) / (gap * gap);
  if (std::isinf(g2)) return Outcome::infinite();
  return Outcome::finite(g2);
}

double weak_drive_g2(complex eta) {
  const Outcome g2 = weak_drive_g2_tagged(eta);
  if (!g2.is_finite()) {
    throw divergence_error("weak_drive_g2 diverges at eta = 2 (the detected flux vanishes)");
  }
  return g2.value;
}

double resonant_flux_ratio(double abs_eta, double s) {
  if (!(abs_eta > 0.0) || std::isnan(abs_eta)) {
    throw domain_error("resonant_flux_ratio: |eta| must be > 0");
  }
  if (std::isnan(s) || s < 0.0) throw domain_error("resonant_flux_ratio: s must be >= 0");
  if (std::isinf(s)) return 1.0;
  const double c = 1.0 - 2.0 / abs_eta;
  return (c * c + s) / (1.0 + s);
}

CarmichaelParams carmichael_map(complex eta, complex beta) {
  const double mag = std::abs(eta);
  if (mag == 0.0) throw domain_error("carmichael_map: eta must be nonzero");
  const bool real_eta = std::abs(eta.imag()) <= 1e-12 * mag && eta.real() > 0.0;
  return {mag * std::norm(beta), 1.0 / mag, real_eta && mag >= 1.0};
}

}  // namespace dipolewave::stats
