#pragma once

#include <vector>

#include "dipolewave/vec3.hpp"

namespace dipolewave::bloch {

/// Two-level atom: decay rate Gamma and laser detuning Delta = w_L - w_A.
/// All dynamics are in the frame rotating at the laser frequency.
class AtomParams {
 public:
  AtomParams(double gamma, double detuning);
  static AtomParams from_delta(double gamma, double delta);

  double gamma() const { return gamma_; }
  double detuning() const { return detuning_; }
  /// delta = 2 Delta / Gamma
  double delta() const { return 2.0 * detuning_ / gamma_; }

 private:
  double gamma_;
  double detuning_;
};

/// Coherent amplitude of the dipole-channel input; |beta|^2 is a photon flux.
struct DriveAmplitude {
  complex beta{0.0, 0.0};

  /// s = 8 |beta|^2 / Gamma
  double saturation(const AtomParams& atom) const { return 8.0 * std::norm(beta) / atom.gamma(); }

  /// Amplitude with saturation s and the given phase.
  static DriveAmplitude from_saturation(double s, const AtomParams& atom, double phase = 0.0);
};

struct BlochState {
  complex sm{0.0, 0.0};  // <sigma^->
  double sz = -1.0;      // <sigma_z>

  double excited_population() const { return 0.5 * (1.0 + sz); }
  /// 4|sm|^2 + sz^2, at most 1 for a physical state.
  double bloch_radius_sq() const { return 4.0 * std::norm(sm) + sz * sz; }

  static BlochState ground() { return {}; }
  static BlochState excited() { return {{0.0, 0.0}, 1.0}; }
};

/// Time derivative of (sm, sz) from the optical Bloch equations.
BlochState bloch_rhs(const BlochState& state, const AtomParams& atom, const DriveAmplitude& drive);

/// Closed-form steady state.
BlochState steady_state(const AtomParams& atom, const DriveAmplitude& drive);

struct TrajectoryPoint {
  double t;
  BlochState state;
};

struct EvolveOptions {
  double dt_gamma = 0.01;      // step in units of 1/Gamma; must be <= 0.05
  double horizon_gamma = 30.0; // T in units of 1/Gamma
  int record_every = 1;
};

/// Fixed-step RK4 integration. The returned trajectory starts at t = 0 and
/// ends exactly at T. Throws numeric_error if the state leaves the Bloch ball
/// by more than 1e-6.
std::vector<TrajectoryPoint> evolve(const BlochState& initial, const AtomParams& atom,
                                    const DriveAmplitude& drive, const EvolveOptions& options = {});

/// sqrt(Gamma) 2 Re(beta* sm) + Gamma (1 + sz)/2. Zero at steady state.
double flux_balance_residual(const BlochState& state, const AtomParams& atom,
                             const DriveAmplitude& drive);

}  // namespace dipolewave::bloch
