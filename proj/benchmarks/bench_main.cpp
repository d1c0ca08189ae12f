#include <benchmark/benchmark.h>

#include "dipolewave/bloch.hpp"
#include "dipolewave/overlap.hpp"
#include "dipolewave/regression_oracle.hpp"

using namespace dipolewave;

static void BM_QuabisOverlapPolar(benchmark::State& state) {
  const overlap::QuadratureOptions q{.n_alpha = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    const auto s = spectra::quabis_spectrum(1.0, 2.0, q);
    benchmark::DoNotOptimize(overlap::dipole_overlap(s, 0, {.quadrature = q}).content);
  }
}
BENCHMARK(BM_QuabisOverlapPolar)->Arg(64)->Arg(128)->Arg(256);

static void BM_SineOverlap2D(benchmark::State& state) {
  const overlap::QuadratureOptions q{.n_alpha = static_cast<int>(state.range(0)),
                                     .n_beta = 2 * static_cast<int>(state.range(0)),
                                     .threads = static_cast<unsigned>(state.range(1))};
  const auto s = spectra::sine_spectrum(pi / 2, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(overlap::dipole_overlap(s, CVec3(1.0, 0.0, 0.0), {.quadrature = q}).content);
  }
}
BENCHMARK(BM_SineOverlap2D)->Args({64, 1})->Args({128, 1})->Args({128, 4})->Unit(benchmark::kMillisecond);

static void BM_SteadyDensity(benchmark::State& state) {
  const bloch::AtomParams atom(1.0, 0.5);
  const auto drive = bloch::DriveAmplitude::from_saturation(1.0, atom);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::steady_density(oracle::build_liouvillian(atom, drive)).sz());
  }
}
BENCHMARK(BM_SteadyDensity);

static void BM_G2Exact(benchmark::State& state) {
  const auto channel = stats::DetectionChannel::side_view();
  const bloch::AtomParams atom(1.0, 0.0);
  const auto drive = bloch::DriveAmplitude::from_saturation(1e-4, atom);
  const double tau = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::g2_exact(channel, 1.0, drive, atom, tau));
  }
}
BENCHMARK(BM_G2Exact)->Arg(0)->Arg(5);

static void BM_Evolve(benchmark::State& state) {
  const bloch::AtomParams atom(1.0, 1.0);
  const auto drive = bloch::DriveAmplitude::from_saturation(10.0, atom);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bloch::evolve(bloch::BlochState::ground(), atom, drive).back().state.sz);
  }
}
BENCHMARK(BM_Evolve)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
