#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "dipolewave/direction.hpp"
#include "dipolewave/quadrature.hpp"
#include "dipolewave/vec3.hpp"

namespace dipolewave::spectra {

enum class Family { dipole, quabis, sine, truncated_dipole, tabulated };
enum class Polarization { longitudinal, transverse };

std::string_view to_string(Family family);
std::string_view to_string(Polarization pol);

struct SpectrumParams {
  double a = 0.0;          // f / w0 for the Quabis family
  int dipole_index = 0;    // M for full dipole spectra
  Polarization polarization = Polarization::longitudinal;
};

/// Longitudinal polarization direction (cos a cos b, cos a sin b, sin a).
Vec3 longitudinal_pol_vector(const Direction& d);

/// Polarization of an x-polarized input ray after an aplanatic lens, in the
/// pupil-azimuth convention of Direction.
Vec3 aplanatic_x_pol_vector(const Direction& d);

/// Monochromatic beam in reciprocal space: a transverse complex vector field
/// on the cap alpha <= theta, identically zero outside it.
///
/// Spectra are closed-form evaluators. Factories return unit-normalized
/// spectra; raw() builds an unnormalized one that normalized() can fix.
/// Spectra whose polarization is the longitudinal vector and whose amplitude
/// depends on alpha only also carry their profile A(alpha), which lets the
/// overlap engine use a 1-D polar rule.
class AngularSpectrum {
 public:
  using Evaluator = std::function<CVec3(const Direction&)>;
  using Profile = std::function<double(double)>;

  static AngularSpectrum raw(Family family, double theta, SpectrumParams params, Evaluator field);
  static AngularSpectrum raw_longitudinal(Family family, double theta, SpectrumParams params,
                                          Profile profile);
  /// Wraps a field whose cap energy is exactly 1 in closed form.
  static AngularSpectrum unit(Family family, double theta, SpectrumParams params, Evaluator field);

  /// Copy scaled to unit cap energy, with the energy integral taken on the
  /// grid described by `options`.
  AngularSpectrum normalized(const overlap::QuadratureOptions& options = {}) const;

  /// Field value; zero for alpha > theta.
  CVec3 operator()(const Direction& d) const;

  /// Scaled amplitude A(alpha)/sqrt(N) for longitudinal-profile spectra.
  std::optional<double> profile(double alpha) const;
  bool has_longitudinal_profile() const { return static_cast<bool>(profile_); }

  Family family() const { return family_; }
  const SpectrumParams& params() const { return params_; }
  double theta_cap() const { return theta_; }
  bool is_normalized() const { return normalized_; }
  /// N, the cap energy of the raw field. 1 until normalized.
  double norm_const() const { return norm_; }

 private:
  AngularSpectrum(Family family, double theta, SpectrumParams params, Evaluator field,
                  Profile profile, double norm, bool normalized);

  Family family_;
  double theta_;
  SpectrumParams params_;
  Evaluator field_;
  Profile profile_;
  double norm_;
  double scale_;
  bool normalized_;
};

/// Full-sphere electric dipole spectrum sqrt(3/8pi) [u_M - (u_M.k) k].
AngularSpectrum dipole_spectrum(int M);

/// Same construction for an arbitrary (unit) dipole orientation, e.g. x.
CVec3 dipole_field(const CVec3& orientation, const Direction& d);

/// A(alpha) = sin(alpha) sqrt|cos(alpha)| exp(-a^2 sin^2(alpha)) times the
/// longitudinal vector, on the cap theta.
AngularSpectrum quabis_spectrum(double a, double theta, const overlap::QuadratureOptions& options = {});

/// Uniformly illuminated aplanatic lens, x-polarized input. Only defined for
/// theta <= pi/2.
AngularSpectrum sine_spectrum(double theta, const overlap::QuadratureOptions& options = {});

/// Dipole wave cut to the cap and renormalized. Longitudinal uses Phi_0,
/// transverse the x-polarized combination (Phi_{-1} - Phi_{+1})/sqrt(2).
AngularSpectrum truncated_dipole_spectrum(Polarization pol, double theta,
                                          const overlap::QuadratureOptions& options = {});

/// User-supplied longitudinal profile A(alpha), normalized on the cap.
AngularSpectrum profile_spectrum(double theta, AngularSpectrum::Profile profile,
                                 const overlap::QuadratureOptions& options = {});

/// Throws domain_error unless 0 < theta <= pi.
void validate_cap(double theta);

}  // namespace dipolewave::spectra
