#include "dipolewave/angular_spectrum.hpp"

#include <cmath>
#include <utility>

#include "dipolewave/errors.hpp"

namespace dipolewave::spectra {

namespace {

const double kDipoleScale = std::sqrt(3.0 / (8.0 * pi));

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::dipole: return "dipole";
    case Family::quabis: return "quabis";
    case Family::sine: return "sine";
    case Family::truncated_dipole: return "truncated-dipole";
    case Family::tabulated: return "tabulated";
  }
  return "unknown";
}

std::string_view to_string(Polarization pol) {
  return pol == Polarization::longitudinal ? "longitudinal" : "transverse";
}

void validate_cap(double theta) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta > pi) {
    throw domain_error("cap half-angle theta must lie in (0, pi]");
  }
}

Vec3 longitudinal_pol_vector(const Direction& d) {
  const double ca = std::cos(d.alpha());
  return {ca * std::cos(d.beta()), ca * std::sin(d.beta()), std::sin(d.alpha())};
}

Vec3 aplanatic_x_pol_vector(const Direction& d) {
  const double ca = std::cos(d.alpha());
  const double cb = std::cos(d.beta());
  const double sb = std::sin(d.beta());
  return {ca * cb * cb + sb * sb, (ca - 1.0) * cb * sb, std::sin(d.alpha()) * cb};
}

AngularSpectrum::AngularSpectrum(Family family, double theta, SpectrumParams params,
                                 Evaluator field, Profile profile, double norm, bool normalized)
    : family_(family),
      theta_(theta),
      params_(params),
      field_(std::move(field)),
      profile_(std::move(profile)),
      norm_(norm),
      scale_(1.0 / std::sqrt(norm)),
      normalized_(normalized) {}

AngularSpectrum AngularSpectrum::raw(Family family, double theta, SpectrumParams params,
                                     Evaluator field) {
  validate_cap(theta);
  return AngularSpectrum(family, theta, params, std::move(field), nullptr, 1.0, false);
}

AngularSpectrum AngularSpectrum::unit(Family family, double theta, SpectrumParams params,
                                      Evaluator field) {
  validate_cap(theta);
  return AngularSpectrum(family, theta, params, std::move(field), nullptr, 1.0, true);
}

AngularSpectrum AngularSpectrum::raw_longitudinal(Family family, double theta,
                                                  SpectrumParams params, Profile profile) {
  validate_cap(theta);
  Evaluator field = [profile](const Direction& d) -> CVec3 {
    return (profile(d.alpha()) * longitudinal_pol_vector(d)).cast<complex>();
  };
  return AngularSpectrum(family, theta, params, std::move(field), std::move(profile), 1.0, false);
}

AngularSpectrum AngularSpectrum::normalized(const overlap::QuadratureOptions& options) const {
  const overlap::QuadratureGrid grid(theta_, options);
  double energy;
  if (profile_) {
    energy = overlap::polar_integrate(
        [this](double alpha) {
          const double v = profile_(alpha);
          return v * v;
        },
        grid);
  } else {
    energy = overlap::cap_integrate(
                 [this](const Direction& d) -> complex { return field_(d).squaredNorm(); }, grid)
                 .real();
  }
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw numeric_error("AngularSpectrum: cap energy is zero or non-finite; cannot normalize");
  }
  return AngularSpectrum(family_, theta_, params_, field_, profile_, energy, true);
}

CVec3 AngularSpectrum::operator()(const Direction& d) const {
  if (d.alpha() > theta_) return CVec3::Zero();
  return scale_ * field_(d);
}

std::optional<double> AngularSpectrum::profile(double alpha) const {
  if (!profile_) return std::nullopt;
  if (alpha > theta_) return 0.0;
  return scale_ * profile_(alpha);
}

CVec3 dipole_field(const CVec3& orientation, const Direction& d) {
  const Vec3 k = d.unit_vector();
  const complex along = bilinear_dot(orientation, k);
  return kDipoleScale * (orientation - along * k.cast<complex>());
}

AngularSpectrum dipole_spectrum(int M) {
  const CVec3 u = CircularUnitVector::make(M).components;
  SpectrumParams params;
  params.dipole_index = M;
  params.polarization = (M == 0) ? Polarization::longitudinal : Polarization::transverse;
  return AngularSpectrum::unit(Family::dipole, pi, params,
                               [u](const Direction& d) { return dipole_field(u, d); });
}

AngularSpectrum quabis_spectrum(double a, double theta, const overlap::QuadratureOptions& options) {
  validate_cap(theta);
  if (!std::isfinite(a) || a < 0.0) throw domain_error("quabis_spectrum: a must be >= 0");
  SpectrumParams params;
  params.a = a;
  const double a2 = a * a;
  auto amplitude = [a2](double alpha) {
    const double s = std::sin(alpha);
    return s * std::sqrt(std::abs(std::cos(alpha))) * std::exp(-a2 * s * s);
  };
  return AngularSpectrum::raw_longitudinal(Family::quabis, theta, params, amplitude)
      .normalized(options);
}

AngularSpectrum sine_spectrum(double theta, const overlap::QuadratureOptions& options) {
  validate_cap(theta);
  if (theta > pi / 2) {
    throw domain_error(
        "sine_spectrum: the aplanatic Sine wave is only valid for theta <= pi/2 "
        "(light incident from one side)");
  }
  SpectrumParams params;
  params.polarization = Polarization::transverse;
  auto field = [](const Direction& d) -> CVec3 {
    return (std::sqrt(std::cos(d.alpha())) * aplanatic_x_pol_vector(d)).cast<complex>();
  };
  return AngularSpectrum::raw(Family::sine, theta, params, field).normalized(options);
}

AngularSpectrum truncated_dipole_spectrum(Polarization pol, double theta,
                                          const overlap::QuadratureOptions& options) {
  validate_cap(theta);
  SpectrumParams params;
  params.polarization = pol;
  if (pol == Polarization::longitudinal) {
    auto amplitude = [](double alpha) { return kDipoleScale * std::sin(alpha); };
    return AngularSpectrum::raw_longitudinal(Family::truncated_dipole, theta, params, amplitude)
        .normalized(options);
  }
  const CVec3 x_hat(1.0, 0.0, 0.0);
  auto field = [x_hat](const Direction& d) { return dipole_field(x_hat, d); };
  return AngularSpectrum::raw(Family::truncated_dipole, theta, params, field).normalized(options);
}

AngularSpectrum profile_spectrum(double theta, AngularSpectrum::Profile profile,
                                 const overlap::QuadratureOptions& options) {
  validate_cap(theta);
  return AngularSpectrum::raw_longitudinal(Family::tabulated, theta, {}, std::move(profile))
      .normalized(options);
}

}  // namespace dipolewave::spectra
