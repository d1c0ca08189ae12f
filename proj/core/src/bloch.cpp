#include "dipolewave/bloch.hpp"

#include <cmath>
#include <sstream>

#include "dipolewave/errors.hpp"

namespace dipolewave::bloch {

AtomParams::AtomParams(double gamma, double detuning) : gamma_(gamma), detuning_(detuning) {
  if (!std::isfinite(gamma) || gamma <= 0.0) throw domain_error("AtomParams: gamma must be > 0");
  if (!std::isfinite(detuning)) throw domain_error("AtomParams: detuning must be finite");
}

AtomParams AtomParams::from_delta(double gamma, double delta) {
  return AtomParams(gamma, 0.5 * delta * gamma);
}

DriveAmplitude DriveAmplitude::from_saturation(double s, const AtomParams& atom, double phase) {
  if (!std::isfinite(s) || s < 0.0) throw domain_error("saturation must be finite and >= 0");
  return {std::polar(std::sqrt(s * atom.gamma() / 8.0), phase)};
}

BlochState bloch_rhs(const BlochState& state, const AtomParams& atom, const DriveAmplitude& drive) {
  using namespace std::complex_literals;
  const double g = atom.gamma();
  const double rg = std::sqrt(g);
  const complex& b = drive.beta;
  BlochState d;
  d.sm = (1i * atom.detuning() - 0.5 * g) * state.sm + rg * b * state.sz;
  d.sz = -g * (1.0 + state.sz) - 4.0 * rg * std::real(std::conj(b) * state.sm);
  return d;
}

BlochState steady_state(const AtomParams& atom, const DriveAmplitude& drive) {
  using namespace std::complex_literals;
  const double delta = atom.delta();
  const double denom = 1.0 + delta * delta + drive.saturation(atom);
  BlochState s;
  s.sm = -2.0 * drive.beta * (1.0 + 1i * delta) / (denom * std::sqrt(atom.gamma()));
  s.sz = -(1.0 + delta * delta) / denom;
  return s;
}

namespace {

BlochState axpy(const BlochState& x, double h, const BlochState& k) {
  return {x.sm + h * k.sm, x.sz + h * k.sz};
}

}  // namespace

std::vector<TrajectoryPoint> evolve(const BlochState& initial, const AtomParams& atom,
                                    const DriveAmplitude& drive, const EvolveOptions& options) {
  if (!(options.dt_gamma > 0.0) || options.dt_gamma > 0.05) {
    throw domain_error("evolve: step must satisfy 0 < dt <= 0.05/Gamma");
  }
  if (!(options.horizon_gamma >= 0.0) || !std::isfinite(options.horizon_gamma)) {
    throw domain_error("evolve: horizon must be finite and >= 0");
  }
  if (options.record_every < 1) throw domain_error("evolve: record_every must be >= 1");
  if (initial.bloch_radius_sq() > 1.0 + 1e-6) {
    throw domain_error("evolve: initial state lies outside the Bloch ball");
  }

  const double g = atom.gamma();
  const double horizon = options.horizon_gamma / g;
  const auto steps = static_cast<long>(std::ceil(options.horizon_gamma / options.dt_gamma - 1e-9));
  const double h = steps > 0 ? horizon / static_cast<double>(steps) : 0.0;

  std::vector<TrajectoryPoint> out;
  out.reserve(static_cast<std::size_t>(steps / options.record_every + 2));
  out.push_back({0.0, initial});

  BlochState x = initial;
  for (long n = 1; n <= steps; ++n) {
    const BlochState k1 = bloch_rhs(x, atom, drive);
    const BlochState k2 = bloch_rhs(axpy(x, 0.5 * h, k1), atom, drive);
    const BlochState k3 = bloch_rhs(axpy(x, 0.5 * h, k2), atom, drive);
    const BlochState k4 = bloch_rhs(axpy(x, h, k3), atom, drive);
    x.sm += (h / 6.0) * (k1.sm + 2.0 * k2.sm + 2.0 * k3.sm + k4.sm);
    x.sz += (h / 6.0) * (k1.sz + 2.0 * k2.sz + 2.0 * k3.sz + k4.sz);

    const double r2 = x.bloch_radius_sq();
    if (!std::isfinite(r2) || r2 > 1.0 + 1e-6) {
      std::ostringstream msg;
      msg << "evolve: state left the Bloch ball (4|sm|^2 + sz^2 = " << r2 << ") at t*Gamma = "
          << n * h * g;
      throw numeric_error(msg.str());
    }
    if (n % options.record_every == 0 || n == steps) {
      out.push_back({n == steps ? horizon : n * h, x});
    }
  }
  return out;
}

double flux_balance_residual(const BlochState& state, const AtomParams& atom,
                             const DriveAmplitude& drive) {
  const double g = atom.gamma();
  return std::sqrt(g) * 2.0 * std::real(std::conj(drive.beta) * state.sm) +
         g * state.excited_population();
}

}  // namespace dipolewave::bloch
