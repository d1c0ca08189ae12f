#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dipolewave/angular_spectrum.hpp"
#include "dipolewave/quadrature.hpp"
#include "dipolewave/table.hpp"

namespace dipolewave::figures {

/// Provenance recorded in every table's meta block.
struct RunInfo {
  std::string command_line;
  overlap::QuadratureOptions quadrature{};
  unsigned threads = 1;  // rows computed concurrently; output order is fixed
};

/// Dipole wave an overlap is taken against: a circular index M, or the
/// x-polarized linear dipole when M is empty.
struct OverlapRequest {
  spectra::Family family = spectra::Family::quabis;
  spectra::Polarization polarization = spectra::Polarization::longitudinal;
  double a = 0.0;
  double theta = 0.5 * pi;  // radians
  int dipole_index = 0;      // M of a full dipole spectrum (Family::dipole)
  std::optional<int> target_M;  // empty: family default (own M, 0 longitudinal, x transverse)
};

/// Single row: overlap_re, overlap_im, p, N and the grid sizes.
FigureTable cmd_overlap(const OverlapRequest& request, const RunInfo& info);

/// Weak-drive g2(0) against |eta| in [0, 8] (801 steps) for phases pi/(2n), n = 1..7.
FigureTable cmd_fig1(const RunInfo& info);

/// Quabis contents for a = 2, 1, 0 and the longitudinal maximum, theta = 0..180 deg.
FigureTable cmd_fig2(const RunInfo& info);

/// Transverse and longitudinal maxima and the Sine wave (theta <= 90 deg only).
FigureTable cmd_fig3(const RunInfo& info);

enum class StatsMode { closed, oracle, both };

/// Photon statistics at one parameter point, in units Gamma = 1.
struct StatsRequest {
  complex eta{1.0, 0.0};
  double s = 1e-4;
  double delta = 0.0;
  std::vector<double> taus;  // delays in units of 1/Gamma, oracle only
  StatsMode mode = StatsMode::both;
};

FigureTable cmd_stats(const StatsRequest& request, const RunInfo& info);

enum class SweepVariable { theta, abs_eta, a, s, delta };

std::optional<SweepVariable> parse_sweep_variable(std::string_view name);
std::string_view to_string(SweepVariable v);

/// One-parameter sweep. theta and a sweep dipole content of `overlap`;
/// abs_eta, s and delta sweep the closed-form and oracle statistics.
struct SweepSpec {
  SweepVariable variable = SweepVariable::theta;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
  bool log_spacing = false;  // geometric spacing; needs lo > 0
  OverlapRequest overlap{};
  double abs_eta = 1.0;
  double eta_phase = 0.0;
  double s = 1e-4;
  double delta = 0.0;
};

FigureTable cmd_sweep(const SweepSpec& spec, const RunInfo& info);

}  // namespace dipolewave::figures
