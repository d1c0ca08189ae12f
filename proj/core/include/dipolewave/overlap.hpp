#pragma once

#include <vector>

#include "dipolewave/angular_spectrum.hpp"
#include "dipolewave/quadrature.hpp"
#include "dipolewave/vec3.hpp"

namespace dipolewave::overlap {

struct OverlapResult {
  complex overlap;  // O_d = integral of chi . Phi* over the cap
  double content;   // p = |O_d|^2, in [0, 1]
};

struct OverlapOptions {
  QuadratureOptions quadrature{};
  /// Use the 1-D polar rule when the spectrum is a longitudinal profile and
  /// the target is Phi_0. The 2-D rule gives the same value to ~1e-15.
  bool polar_shortcut = true;
};

/// Overlap of a normalized spectrum with the full-sphere dipole wave Phi_M.
/// Throws contract_violation for unnormalized spectra.
OverlapResult dipole_overlap(const spectra::AngularSpectrum& spectrum, int M,
                             const OverlapOptions& options = {});

/// Overlap with the dipole wave of an arbitrary unit orientation (x for the
/// linearly polarized transverse dipole).
OverlapResult dipole_overlap(const spectra::AngularSpectrum& spectrum, const CVec3& orientation,
                             const OverlapOptions& options = {});

/// Largest dipole content reachable on a cap with longitudinal
/// polarization: 1/2 + cos^3/4 - 3 cos/4.
double max_overlap_longitudinal(double theta);

/// Cap-energy fraction of the x-polarized dipole wave:
/// (3/8)(1 - cos) + (1/8)(1 - cos^3).
double max_overlap_transverse(double theta);

/// The Cauchy-Schwarz optimal longitudinal profile A*(alpha) ~ sin(alpha),
/// sampled on the polar nodes and scaled to unit cap energy.
struct OptimalProfile {
  std::vector<double> alpha;
  std::vector<double> amplitude;
  double content;
};

OptimalProfile optimal_profile(double theta, const QuadratureOptions& options = {});

/// |eta - 1| = (P/D) sqrt((1 - p)/p). Throws divergence_error at p = 0.
double eta_gap_from_overlap(double content, double p_over_d);

}  // namespace dipolewave::overlap
