#include "cli_app.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dipolewave/errors.hpp"
#include "dipolewave/figures.hpp"
#include "json_config.hpp"

namespace dipolewave::cli {

namespace {

using figures::FigureTable;

constexpr double kDeg = pi / 180.0;

const std::map<std::string, spectra::Family> kFamilies{
    {"quabis", spectra::Family::quabis},
    {"sine", spectra::Family::sine},
    {"truncated-dipole", spectra::Family::truncated_dipole},
    {"dipole", spectra::Family::dipole},
};

const std::map<std::string, spectra::Polarization> kPolarizations{
    {"longitudinal", spectra::Polarization::longitudinal},
    {"transverse", spectra::Polarization::transverse},
};

const std::map<std::string, figures::StatsMode> kModes{
    {"closed", figures::StatsMode::closed},
    {"oracle", figures::StatsMode::oracle},
    {"both", figures::StatsMode::both},
};

struct SpectrumFlags {
  std::string family = "quabis";
  std::string pol = "longitudinal";
  double a = 0.0;
  double theta_deg = 90.0;
  int M = 0;
  std::string dipole;  // "", "-1", "0", "1" or "x"

  void attach(CLI::App* app) {
    app->add_option("--family", family, "Beam family")
        ->check(CLI::IsMember({"quabis", "sine", "truncated-dipole", "dipole"}))
        ->capture_default_str();
    app->add_option("--pol", pol, "Polarization of the truncated dipole")
        ->check(CLI::IsMember({"longitudinal", "transverse"}))
        ->capture_default_str();
    app->add_option("--a", a, "Quabis parameter a = f/w0 (>= 0)")->capture_default_str();
    app->add_option("--theta-deg", theta_deg, "Aperture half-angle in degrees")->capture_default_str();
    app->add_option("--M", M, "Dipole index of a full dipole spectrum")
        ->check(CLI::Range(-1, 1))
        ->capture_default_str();
    app->add_option("--dipole", dipole, "Target dipole: -1, 0, 1 or x (default: family's own)")
        ->check(CLI::IsMember({"-1", "0", "1", "x"}));
  }

  figures::OverlapRequest request() const {
    figures::OverlapRequest r;
    r.family = kFamilies.at(family);
    r.polarization = kPolarizations.at(pol);
    r.a = a;
    r.theta = theta_deg * kDeg;
    r.dipole_index = M;
    if (!dipole.empty() && dipole != "x") r.target_M = std::stoi(dipole);
    if (dipole == "x" && r.family != spectra::Family::sine &&
        !(r.family == spectra::Family::truncated_dipole &&
          r.polarization == spectra::Polarization::transverse)) {
      throw domain_error("--dipole x is only meaningful for transverse families");
    }
    return r;
  }
};

std::string joined_command(int argc, const char* const* argv) {
  std::ostringstream s;
  s << "dipolewave";
  for (int i = 1; i < argc; ++i) s << ' ' << argv[i];
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dipole-wave content of focused beams and photon statistics of the scattered light",
               "dipolewave"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file mirroring the command-line flags");
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  int quad_nodes = 128;
  unsigned threads = 1;
  std::optional<long long> seed;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");
  app.add_option("--quad-nodes", quad_nodes, "Polar Gauss-Legendre nodes (azimuthal uses 2N)")
      ->check(CLI::Range(4, 8192))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for table rows")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--seed", seed, "Reserved; all current paths are deterministic");

  SpectrumFlags overlap_flags;
  auto* overlap_cmd = app.add_subcommand("overlap", "Dipole overlap of one beam");
  overlap_flags.attach(overlap_cmd);

  app.add_subcommand("fig1", "g2(0) against |eta| for phases pi/(2n)");
  app.add_subcommand("fig2", "Quabis dipole content against theta");
  app.add_subcommand("fig3", "Transverse vs longitudinal maxima and the Sine wave");

  double eta_re = 1.0, eta_im = 0.0, s = 1e-4, delta = 0.0;
  std::vector<double> taus;
  std::string mode = "both";
  auto* stats_cmd = app.add_subcommand("stats", "Flux and g2 at one parameter point (Gamma = 1)");
  stats_cmd->add_option("--eta-re", eta_re, "Re(eta)")->capture_default_str();
  stats_cmd->add_option("--eta-im", eta_im, "Im(eta)")->capture_default_str();
  stats_cmd->add_option("--s", s, "Saturation parameter 8|beta|^2/Gamma (> 0)")->capture_default_str();
  stats_cmd->add_option("--delta", delta, "Dimensionless detuning 2 Delta/Gamma")->capture_default_str();
  stats_cmd->add_option("--tau", taus, "Delays in units of 1/Gamma (oracle)")->delimiter(',');
  stats_cmd->add_option("--mode", mode, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}))
      ->capture_default_str();

  std::string sweep_var = "theta";
  double lo = 1.0, hi = 90.0;
  int steps = 90;
  bool log_spacing = false;
  double abs_eta = 1.0, eta_phase_deg = 0.0, sweep_s = 1e-4, sweep_delta = 0.0;
  SpectrumFlags sweep_flags;
  auto* sweep_cmd = app.add_subcommand("sweep", "One-parameter sweep (theta in degrees)");
  sweep_cmd->add_option("--var", sweep_var, "theta, abs_eta, a, s or delta")
      ->check(CLI::IsMember({"theta", "abs_eta", "a", "s", "delta"}))
      ->capture_default_str();
  sweep_cmd->add_option("--lo", lo, "Range start")->capture_default_str();
  sweep_cmd->add_option("--hi", hi, "Range end")->capture_default_str();
  sweep_cmd->add_option("--steps", steps, "Number of points (>= 2)")->capture_default_str();
  sweep_cmd->add_flag("--log", log_spacing, "Geometric spacing between lo and hi");
  sweep_cmd->add_option("--abs-eta", abs_eta, "|eta| when not swept")->capture_default_str();
  sweep_cmd->add_option("--eta-phase-deg", eta_phase_deg, "arg(eta) in degrees")->capture_default_str();
  sweep_cmd->add_option("--s", sweep_s, "Saturation when not swept")->capture_default_str();
  sweep_cmd->add_option("--delta", sweep_delta, "Detuning when not swept")->capture_default_str();
  sweep_flags.attach(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dipolewave: " << e.what() << "\n";
    return kExitUsage;
  }

  figures::RunInfo info;
  info.command_line = joined_command(argc, argv);
  info.quadrature.n_alpha = quad_nodes;
  info.quadrature.n_beta = 2 * quad_nodes;
  info.threads = threads;

  try {
    std::optional<FigureTable> table;
    if (overlap_cmd->parsed()) {
      table = figures::cmd_overlap(overlap_flags.request(), info);
    } else if (app.got_subcommand("fig1")) {
      table = figures::cmd_fig1(info);
    } else if (app.got_subcommand("fig2")) {
      table = figures::cmd_fig2(info);
    } else if (app.got_subcommand("fig3")) {
      table = figures::cmd_fig3(info);
    } else if (stats_cmd->parsed()) {
      figures::StatsRequest r;
      r.eta = {eta_re, eta_im};
      r.s = s;
      r.delta = delta;
      r.taus = taus;
      r.mode = kModes.at(mode);
      table = figures::cmd_stats(r, info);
    } else if (sweep_cmd->parsed()) {
      figures::SweepSpec spec;
      spec.variable = *figures::parse_sweep_variable(sweep_var);
      const double scale = spec.variable == figures::SweepVariable::theta ? kDeg : 1.0;
      spec.lo = lo * scale;
      spec.hi = hi * scale;
      spec.steps = steps;
      spec.log_spacing = log_spacing;
      spec.overlap = sweep_flags.request();
      spec.abs_eta = abs_eta;
      spec.eta_phase = eta_phase_deg * kDeg;
      spec.s = sweep_s;
      spec.delta = sweep_delta;
      table = figures::cmd_sweep(spec, info);
    }

    const std::string text = format == "json" ? table->to_json() : table->to_csv();
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        err << "dipolewave: cannot open '" << out_path << "' for writing\n";
        return kExitUsage;
      }
      file << text;
    }
    return kExitOk;
  } catch (const numeric_error& e) {
    err << "dipolewave: numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::domain_error& e) {
    err << "dipolewave: " << e.what() << "\n";
    return kExitUsage;
  } catch (const contract_violation& e) {
    err << "dipolewave: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace dipolewave::cli
