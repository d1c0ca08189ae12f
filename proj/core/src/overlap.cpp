#include "dipolewave/overlap.hpp"

#include <cmath>

#include "dipolewave/errors.hpp"

namespace dipolewave::overlap {

using spectra::AngularSpectrum;
using spectra::Direction;

namespace {

const double kDipoleScale = std::sqrt(3.0 / (8.0 * pi));

OverlapResult finish(complex o) {
  double p = std::norm(o);
  if (!std::isfinite(p)) throw numeric_error("dipole_overlap: non-finite overlap");
  if (p > 1.0) {
    if (p > 1.0 + 1e-12) {
      throw numeric_error("dipole_overlap: content exceeds 1; quadrature is under-resolved");
    }
    p = 1.0;
  }
  return {o, p};
}

void validate_closed_form_theta(double theta) {
  if (!std::isfinite(theta) || theta < 0.0 || theta > pi) {
    throw domain_error("theta must lie in [0, pi]");
  }
}

}  // namespace

OverlapResult dipole_overlap(const AngularSpectrum& spectrum, const CVec3& orientation,
                             const OverlapOptions& options) {
  if (!spectrum.is_normalized()) {
    throw contract_violation("dipole_overlap: spectrum must be normalized first");
  }
  const QuadratureGrid grid(spectrum.theta_cap(), options.quadrature);

  const bool along_z = orientation(0) == 0.0 && orientation(1) == 0.0 && orientation(2) == 1.0;
  if (options.polar_shortcut && along_z && spectrum.has_longitudinal_profile()) {
    // chi . Phi_0* = A(alpha)/sqrt(N) * sqrt(3/8pi) sin(alpha), since p.p = 1.
    const double o = polar_integrate(
        [&](double alpha) { return *spectrum.profile(alpha) * kDipoleScale * std::sin(alpha); },
        grid);
    return finish(o);
  }

  const complex o = cap_integrate(
      [&](const Direction& d) {
        return hermitian_dot(spectra::dipole_field(orientation, d), spectrum(d));
      },
      grid);
  return finish(o);
}

OverlapResult dipole_overlap(const AngularSpectrum& spectrum, int M, const OverlapOptions& options) {
  return dipole_overlap(spectrum, spectra::CircularUnitVector::make(M).components, options);
}

// Written with 1 - cos = 2 sin^2(theta/2) so small caps do not cancel.
double max_overlap_longitudinal(double theta) {
  validate_closed_form_theta(theta);
  const double h = std::sin(0.5 * theta);
  const double h2 = h * h;
  return h2 * h2 * (2.0 + std::cos(theta));
}

double max_overlap_transverse(double theta) {
  validate_closed_form_theta(theta);
  const double c = std::cos(theta);
  const double h = std::sin(0.5 * theta);
  return 0.25 * h * h * (4.0 + c + c * c);
}

OptimalProfile optimal_profile(double theta, const QuadratureOptions& options) {
  spectra::validate_cap(theta);
  const AngularSpectrum spectrum =
      spectra::profile_spectrum(theta, [](double alpha) { return std::sin(alpha); }, options);

  OptimalProfile out;
  const QuadratureGrid grid(theta, options);
  out.alpha.assign(grid.alpha_nodes().begin(), grid.alpha_nodes().end());
  out.amplitude.reserve(out.alpha.size());
  for (double alpha : out.alpha) out.amplitude.push_back(*spectrum.profile(alpha));
  out.content = dipole_overlap(spectrum, 0, {.quadrature = options}).content;
  return out;
}

double eta_gap_from_overlap(double content, double p_over_d) {
  if (!std::isfinite(content) || content < 0.0 || content > 1.0) {
    throw domain_error("eta_gap_from_overlap: content must lie in (0, 1]");
  }
  if (!std::isfinite(p_over_d) || p_over_d < 0.0) {
    throw domain_error("eta_gap_from_overlap: P/D must be >= 0");
  }
  if (content == 0.0) {
    throw divergence_error("eta_gap_from_overlap: zero dipole content, eta is unbounded");
  }
  return p_over_d * std::sqrt((1.0 - content) / content);
}

}  // namespace dipolewave::overlap
