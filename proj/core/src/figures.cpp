#include "dipolewave/figures.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "dipolewave/errors.hpp"
#include "dipolewave/overlap.hpp"
#include "dipolewave/photon_stats.hpp"
#include "dipolewave/regression_oracle.hpp"

namespace dipolewave::figures {

using spectra::Family;
using spectra::Polarization;

namespace {

using Row = std::vector<Cell>;

// Rows may be computed on several threads; they are stored by index so the
// emitted order never depends on scheduling.
std::vector<Row> compute_rows(std::size_t count, unsigned threads,
                              const std::function<Row(std::size_t)>& make_row) {
  std::vector<Row> rows(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) rows[i] = make_row(i);
    return rows;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += threads) rows[i] = make_row(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void add_common_meta(FigureTable& table, const RunInfo& info, std::string_view subcommand,
                     const std::string& canonical) {
  table.add_meta("tool", "dipolewave " DIPOLEWAVE_VERSION);
  table.add_meta("command", info.command_line.empty() ? std::string(subcommand) : info.command_line);
  table.add_meta("subcommand", std::string(subcommand));
  table.add_meta("quad_nodes_alpha", std::to_string(info.quadrature.n_alpha));
  table.add_meta("quad_nodes_beta", std::to_string(info.quadrature.n_beta));
  table.add_meta("input_hash", fnv1a_hex(std::string(subcommand) + "|" + canonical + "|" +
                                         std::to_string(info.quadrature.n_alpha) + "|" +
                                         std::to_string(info.quadrature.n_beta)));
}

overlap::QuadratureOptions single_threaded(overlap::QuadratureOptions q) {
  q.threads = 1;
  return q;
}

// Angle on a 1-degree grid; k/180 is formed first so 90 and 180 degrees land
// exactly on pi/2 and pi.
double degree_grid(int k) { return (k / 180.0) * pi; }

spectra::AngularSpectrum build_spectrum(const OverlapRequest& r, const overlap::QuadratureOptions& q) {
  switch (r.family) {
    case Family::dipole: return spectra::dipole_spectrum(r.dipole_index);
    case Family::quabis: return spectra::quabis_spectrum(r.a, r.theta, q);
    case Family::sine: return spectra::sine_spectrum(r.theta, q);
    case Family::truncated_dipole: return spectra::truncated_dipole_spectrum(r.polarization, r.theta, q);
    case Family::tabulated: break;
  }
  throw domain_error("overlap: family 'tabulated' needs a profile and is library-only");
}

overlap::OverlapResult overlap_for(const OverlapRequest& r, const overlap::QuadratureOptions& q) {
  const auto spectrum = build_spectrum(r, q);
  const overlap::OverlapOptions opts{.quadrature = q};
  if (r.target_M) return overlap::dipole_overlap(spectrum, *r.target_M, opts);
  if (r.family == Family::dipole) return overlap::dipole_overlap(spectrum, r.dipole_index, opts);
  const bool transverse = r.family == Family::sine ||
                          (r.family == Family::truncated_dipole &&
                           r.polarization == Polarization::transverse);
  if (transverse) return overlap::dipole_overlap(spectrum, CVec3(1.0, 0.0, 0.0), opts);
  return overlap::dipole_overlap(spectrum, 0, opts);
}

std::string target_name(const OverlapRequest& r) {
  if (r.target_M) return "M=" + std::to_string(*r.target_M);
  if (r.family == Family::dipole) return "M=" + std::to_string(r.dipole_index);
  if (r.family == Family::sine ||
      (r.family == Family::truncated_dipole && r.polarization == Polarization::transverse)) {
    return "x-linear";
  }
  return "M=0";
}

std::string describe(const OverlapRequest& r) {
  std::ostringstream s;
  s << "family=" << spectra::to_string(r.family) << ";pol=" << spectra::to_string(r.polarization)
    << ";a=" << format_number(r.a) << ";theta=" << format_number(r.theta)
    << ";dipole_index=" << r.dipole_index << ";target=" << target_name(r);
  return s.str();
}

double spectrum_norm(const OverlapRequest& r, const overlap::QuadratureOptions& q) {
  return build_spectrum(r, q).norm_const();
}

struct StatsPoint {
  double flux_closed;
  Outcome g2_closed;
  double flux_oracle;
  std::vector<Outcome> g2_oracle;  // [0] is tau = 0
};

StatsPoint stats_point(complex eta, double s, double delta, const std::vector<double>& taus,
                       bool want_oracle) {
  StatsPoint p{std::norm(eta - 2.0), stats::weak_drive_g2_tagged(eta), 0.0, {}};
  if (!want_oracle) return p;
  const auto channel = stats::DetectionChannel::side_view();
  const auto atom = bloch::AtomParams::from_delta(1.0, delta);
  const auto drive = bloch::DriveAmplitude::from_saturation(s, atom);
  p.flux_oracle = oracle::flux_ratio_exact(channel, eta, drive, atom);
  std::vector<double> all{0.0};
  all.insert(all.end(), taus.begin(), taus.end());
  p.g2_oracle = oracle::g2_exact_curve(channel, eta, drive, atom, all);
  return p;
}

Cell relative_deviation(const Outcome& exact, const Outcome& closed) {
  if (!exact.is_finite() || !closed.is_finite()) return kNan;
  return std::abs(exact.value - closed.value) / std::max(closed.value, 1.0);
}

void validate_stats(complex eta, double s, double delta) {
  if (!std::isfinite(eta.real()) || !std::isfinite(eta.imag())) {
    throw domain_error("stats: eta must be finite");
  }
  if (!std::isfinite(s) || s <= 0.0) throw domain_error("stats: s must be finite and > 0");
  if (!std::isfinite(delta)) throw domain_error("stats: delta must be finite");
}

}  // namespace

FigureTable cmd_overlap(const OverlapRequest& request, const RunInfo& info) {
  const auto q = single_threaded(info.quadrature);
  const auto result = overlap_for(request, info.quadrature);

  FigureTable table({"theta", "a", "overlap_re", "overlap_im", "p", "N", "n_alpha", "n_beta"});
  const double theta = request.family == Family::dipole ? pi : request.theta;
  table.add_row({theta, request.a, result.overlap.real(), result.overlap.imag(), result.content,
                 spectrum_norm(request, q), static_cast<double>(q.n_alpha),
                 static_cast<double>(q.n_beta)});
  add_common_meta(table, info, "overlap", describe(request));
  table.add_meta("family", std::string(spectra::to_string(request.family)));
  table.add_meta("target_dipole", target_name(request));
  table.add_meta("angle_units", "radians");
  return table;
}

FigureTable cmd_fig1(const RunInfo& info) {
  constexpr int kSteps = 801;
  constexpr double kMax = 8.0;
  std::vector<std::string> cols{"abs_eta"};
  for (int n = 1; n <= 7; ++n) cols.push_back("g2_phase_n" + std::to_string(n));
  FigureTable table(cols);

  auto rows = compute_rows(kSteps, info.threads, [&](std::size_t k) {
    const double mag = kMax * static_cast<double>(k) / (kSteps - 1);
    Row row{mag};
    for (int n = 1; n <= 7; ++n) {
      row.push_back(to_cell(stats::weak_drive_g2_tagged(std::polar(mag, pi / (2.0 * n)))));
    }
    return row;
  });
  for (auto& r : rows) table.add_row(std::move(r));

  add_common_meta(table, info, "fig1", "abs_eta=[0,8];steps=801;phase=pi/(2n),n=1..7");
  table.add_meta("model", "weak-drive on-resonance closed form g2(0)");
  return table;
}

FigureTable cmd_fig2(const RunInfo& info) {
  const auto q = single_threaded(info.quadrature);
  FigureTable table({"theta", "p_a2", "p_a1", "p_a0", "p_max"});

  auto rows = compute_rows(181, info.threads, [&](std::size_t k) {
    const double theta = degree_grid(static_cast<int>(k));
    if (k == 0) return Row{0.0, 0.0, 0.0, 0.0, 0.0};
    Row row{theta};
    for (double a : {2.0, 1.0, 0.0}) {
      row.push_back(overlap::dipole_overlap(spectra::quabis_spectrum(a, theta, q), 0,
                                            {.quadrature = q})
                        .content);
    }
    row.push_back(overlap::max_overlap_longitudinal(theta));
    return row;
  });
  for (auto& r : rows) table.add_row(std::move(r));

  add_common_meta(table, info, "fig2", "theta=0..180deg;step=1deg;a=2,1,0");
  table.add_meta("theta_range", "[0, pi] radians in 1-degree steps; theta=0 is the empty-cap limit p=0");
  return table;
}

FigureTable cmd_fig3(const RunInfo& info) {
  const auto q = single_threaded(info.quadrature);
  FigureTable table({"theta", "p_trans_max", "p_long_max", "p_sine"});

  auto rows = compute_rows(181, info.threads, [&](std::size_t k) {
    const double theta = degree_grid(static_cast<int>(k));
    if (k == 0) return Row{0.0, 0.0, 0.0, 0.0};
    Cell sine = kNan;
    if (theta <= pi / 2) {
      sine = overlap::dipole_overlap(spectra::sine_spectrum(theta, q), CVec3(1.0, 0.0, 0.0),
                                     {.quadrature = q})
                 .content;
    }
    return Row{theta, overlap::max_overlap_transverse(theta),
               overlap::max_overlap_longitudinal(theta), sine};
  });
  for (auto& r : rows) table.add_row(std::move(r));

  add_common_meta(table, info, "fig3", "theta=0..180deg;step=1deg");
  table.add_meta("p_sine_domain", "theta <= pi/2; nan beyond");
  return table;
}

FigureTable cmd_stats(const StatsRequest& request, const RunInfo& info) {
  validate_stats(request.eta, request.s, request.delta);
  for (double tau : request.taus) {
    if (!std::isfinite(tau) || tau < 0.0) throw domain_error("stats: tau values must be >= 0");
  }
  const bool closed = request.mode != StatsMode::oracle;
  const bool oracle = request.mode != StatsMode::closed;

  std::vector<std::string> cols{"eta_re", "eta_im", "s", "delta"};
  if (closed) {
    cols.push_back("flux_ratio_closed");
    cols.push_back("g2_0_closed");
  }
  if (oracle) {
    cols.push_back("flux_ratio_oracle");
    cols.push_back("g2_0_oracle");
    for (double tau : request.taus) cols.push_back("g2_tau_" + format_number(tau));
  }
  if (closed && oracle) {
    cols.push_back("rel_dev_flux_ratio");
    cols.push_back("rel_dev_g2_0");
  }
  FigureTable table(cols);

  const StatsPoint p = stats_point(request.eta, request.s, request.delta, request.taus, oracle);
  Row row{request.eta.real(), request.eta.imag(), request.s, request.delta};
  if (closed) {
    row.push_back(p.flux_closed);
    row.push_back(to_cell(p.g2_closed));
  }
  if (oracle) {
    row.push_back(p.flux_oracle);
    for (const Outcome& g : p.g2_oracle) row.push_back(to_cell(g));
  }
  if (closed && oracle) {
    row.push_back(relative_deviation(Outcome::finite(p.flux_oracle), Outcome::finite(p.flux_closed)));
    row.push_back(relative_deviation(p.g2_oracle.front(), p.g2_closed));
  }
  table.add_row(std::move(row));

  std::ostringstream canon;
  canon << "eta=" << format_number(request.eta.real()) << "," << format_number(request.eta.imag())
        << ";s=" << format_number(request.s) << ";delta=" << format_number(request.delta)
        << ";mode=" << static_cast<int>(request.mode) << ";taus=";
  for (double tau : request.taus) canon << format_number(tau) << ",";
  add_common_meta(table, info, "stats", canon.str());
  table.add_meta("units", "Gamma = 1; tau in 1/Gamma; fluxes relative to F0 = |D beta|^2");
  if (closed) table.add_meta("closed_form_regime", "weak drive (s << 1), on resonance (delta = 0)");
  return table;
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
  if (name == "theta") return SweepVariable::theta;
  if (name == "abs_eta") return SweepVariable::abs_eta;
  if (name == "a") return SweepVariable::a;
  if (name == "s") return SweepVariable::s;
  if (name == "delta") return SweepVariable::delta;
  return std::nullopt;
}

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::theta: return "theta";
    case SweepVariable::abs_eta: return "abs_eta";
    case SweepVariable::a: return "a";
    case SweepVariable::s: return "s";
    case SweepVariable::delta: return "delta";
  }
  return "unknown";
}

FigureTable cmd_sweep(const SweepSpec& spec, const RunInfo& info) {
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) || !(spec.lo < spec.hi)) {
    throw domain_error("sweep: need finite lo < hi");
  }
  if (spec.steps < 2) throw domain_error("sweep: steps must be >= 2");
  if (spec.log_spacing && spec.lo <= 0.0) throw domain_error("sweep: log spacing needs lo > 0");

  const bool overlap_sweep = spec.variable == SweepVariable::theta || spec.variable == SweepVariable::a;
  switch (spec.variable) {
    case SweepVariable::theta:
      if (spec.lo <= 0.0 || spec.hi > pi) throw domain_error("sweep: theta range must lie in (0, pi]");
      if (spec.overlap.family == Family::sine && spec.hi > pi / 2) {
        throw domain_error("sweep: the Sine wave is only valid for theta <= pi/2");
      }
      break;
    case SweepVariable::a:
      if (spec.lo < 0.0) throw domain_error("sweep: a must be >= 0");
      break;
    case SweepVariable::abs_eta:
      if (spec.lo < 0.0) throw domain_error("sweep: |eta| must be >= 0");
      break;
    case SweepVariable::s:
      if (spec.lo <= 0.0) throw domain_error("sweep: s must be > 0");
      break;
    case SweepVariable::delta:
      break;
  }
  if (overlap_sweep) {
    // Validates the fixed parameters once, before any row is computed.
    OverlapRequest probe = spec.overlap;
    if (spec.variable == SweepVariable::theta) probe.theta = spec.hi;
    if (spec.variable == SweepVariable::a) probe.a = spec.lo;
    build_spectrum(probe, {.n_alpha = 8, .n_beta = 8});
  } else {
    validate_stats(std::polar(std::max(spec.abs_eta, 0.0), spec.eta_phase), spec.s, spec.delta);
  }

  const std::string var(to_string(spec.variable));
  std::vector<std::string> cols{var};
  if (overlap_sweep) {
    cols.insert(cols.end(), {"overlap_re", "overlap_im", "p", "N"});
  } else {
    cols.insert(cols.end(), {"flux_ratio_closed", "g2_0_closed", "flux_ratio_oracle", "g2_0_oracle"});
  }
  FigureTable table(cols);

  const auto q = single_threaded(info.quadrature);
  auto rows = compute_rows(static_cast<std::size_t>(spec.steps), info.threads, [&](std::size_t k) {
    const double frac = static_cast<double>(k) / (spec.steps - 1);
    double v = spec.log_spacing ? spec.lo * std::pow(spec.hi / spec.lo, frac)
                                : spec.lo + (spec.hi - spec.lo) * frac;
    if (k == 0) v = spec.lo;
    if (k + 1 == static_cast<std::size_t>(spec.steps)) v = spec.hi;
    try {
      if (overlap_sweep) {
        OverlapRequest r = spec.overlap;
        (spec.variable == SweepVariable::theta ? r.theta : r.a) = v;
        const auto res = overlap_for(r, q);
        return Row{v, res.overlap.real(), res.overlap.imag(), res.content, spectrum_norm(r, q)};
      }
      double abs_eta = spec.abs_eta, s = spec.s, delta = spec.delta;
      if (spec.variable == SweepVariable::abs_eta) abs_eta = v;
      if (spec.variable == SweepVariable::s) s = v;
      if (spec.variable == SweepVariable::delta) delta = v;
      const StatsPoint p = stats_point(std::polar(abs_eta, spec.eta_phase), s, delta, {}, true);
      return Row{v, p.flux_closed, to_cell(p.g2_closed), p.flux_oracle, to_cell(p.g2_oracle.front())};
    } catch (const numeric_error&) {
      Row row{v};
      row.resize(table.columns().size(), kNan);
      return row;
    }
  });
  for (auto& r : rows) table.add_row(std::move(r));

  std::ostringstream canon;
  canon << "var=" << var << ";lo=" << format_number(spec.lo) << ";hi=" << format_number(spec.hi)
        << ";steps=" << spec.steps << ";log=" << spec.log_spacing << ";" << describe(spec.overlap)
        << ";abs_eta=" << format_number(spec.abs_eta) << ";eta_phase=" << format_number(spec.eta_phase)
        << ";s=" << format_number(spec.s) << ";delta=" << format_number(spec.delta);
  add_common_meta(table, info, "sweep", canon.str());
  table.add_meta("sweep_variable", var);
  table.add_meta("spacing", spec.log_spacing ? "geometric" : "linear");
  if (overlap_sweep) {
    table.add_meta("family", std::string(spectra::to_string(spec.overlap.family)));
    table.add_meta("target_dipole", target_name(spec.overlap));
  } else {
    table.add_meta("units", "Gamma = 1; fluxes relative to F0 = |D beta|^2");
  }
  return table;
}

}  // namespace dipolewave::figures
