#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dipolewave/errors.hpp"
#include "dipolewave/overlap.hpp"
#include "oracles.hpp"

namespace dipolewave::overlap {
namespace {

using spectra::Polarization;

const CVec3 kX(1.0, 0.0, 0.0);

TEST(DipoleOverlap, QuabisPlaneLimit) {
  const auto q = spectra::quabis_spectrum(0.0, pi / 2);
  const double p = dipole_overlap(q, 0).content;
  EXPECT_NEAR(p, 64.0 / 147.0, 1e-12);
  const double p2d = dipole_overlap(q, 0, {.polar_shortcut = false}).content;
  EXPECT_NEAR(p2d, p, 1e-14);
}

TEST(DipoleOverlap, OverlapIsRealForLongitudinalProfiles) {
  const auto q = spectra::quabis_spectrum(1.2, 2.0);
  const auto r = dipole_overlap(q, 0, {.polar_shortcut = false});
  EXPECT_LT(std::abs(r.overlap.imag()), 1e-14);
  EXPECT_GT(r.overlap.real(), 0.0);
}

TEST(DipoleOverlap, FullDipoleHasUnitContent) {
  for (int M : {-1, 0, 1}) {
    EXPECT_NEAR(dipole_overlap(spectra::dipole_spectrum(M), M).content, 1.0, 1e-12);
    for (int K : {-1, 0, 1}) {
      if (K == M) continue;
      EXPECT_NEAR(dipole_overlap(spectra::dipole_spectrum(M), K).content, 0.0, 1e-12);
    }
  }
}

TEST(DipoleOverlap, TruncatedLongitudinalMatchesClosedForm) {
  for (int k = 1; k <= 20; ++k) {
    const double theta = pi * k / 20.0;
    const auto s = spectra::truncated_dipole_spectrum(Polarization::longitudinal, theta);
    EXPECT_NEAR(dipole_overlap(s, 0).content, max_overlap_longitudinal(theta), 1e-8) << theta;
    EXPECT_NEAR(dipole_overlap(s, 0, {.polar_shortcut = false}).content,
                max_overlap_longitudinal(theta), 1e-8)
        << theta;
  }
  EXPECT_NEAR(max_overlap_longitudinal(pi / 2), 0.5, 1e-12);
}

TEST(DipoleOverlap, TruncatedTransverseMatchesClosedForm) {
  for (double theta : {0.3, pi / 4, pi / 2, 2.0, 2.9, pi}) {
    const auto s = spectra::truncated_dipole_spectrum(Polarization::transverse, theta);
    EXPECT_NEAR(dipole_overlap(s, kX).content, max_overlap_transverse(theta), 1e-8) << theta;
  }
  EXPECT_NEAR(max_overlap_transverse(pi / 2), 0.5, 1e-15);
}

TEST(DipoleOverlap, TransverseQuarterPiAgainstReference) {
  const double theta = pi / 4;
  const double ref = testing::cap_reference(
                         [](const spectra::Direction& d) {
                           return complex(spectra::dipole_field(CVec3(1.0, 0.0, 0.0), d).squaredNorm(), 0.0);
                         },
                         theta)
                         .real();
  EXPECT_NEAR(max_overlap_transverse(theta), ref, 1e-8);
  const auto s = spectra::truncated_dipole_spectrum(Polarization::transverse, theta);
  EXPECT_NEAR(dipole_overlap(s, kX).content, ref, 1e-8);
}

TEST(DipoleOverlap, SineWaveHemisphere) {
  EXPECT_NEAR(dipole_overlap(spectra::sine_spectrum(pi / 2), kX).content, 32.0 / 75.0, 1e-10);
}

TEST(DipoleOverlap, RejectsUnnormalizedSpectrum) {
  const auto raw = spectra::AngularSpectrum::raw_longitudinal(spectra::Family::tabulated, 1.0, {},
                                                              [](double a) { return std::sin(a); });
  EXPECT_THROW(dipole_overlap(raw, 0), contract_violation);
}

TEST(ClosedForms, EndpointsAndRange) {
  EXPECT_EQ(max_overlap_longitudinal(0.0), 0.0);
  EXPECT_EQ(max_overlap_transverse(0.0), 0.0);
  EXPECT_NEAR(max_overlap_longitudinal(pi), 1.0, 1e-15);
  EXPECT_NEAR(max_overlap_transverse(pi), 1.0, 1e-15);
  EXPECT_THROW(max_overlap_longitudinal(-0.1), domain_error);
  EXPECT_THROW(max_overlap_transverse(3.2), domain_error);
  // Stable at tiny theta: leading terms 3 theta^4 / 16 and 3 theta^2 / 8.
  EXPECT_NEAR(max_overlap_longitudinal(1e-4) / (3e-16 / 16), 1.0, 1e-6);
  EXPECT_NEAR(max_overlap_transverse(1e-4) / (3e-8 / 8), 1.0, 1e-6);
}

TEST(ClosedForms, OrderingCrossesAtHemisphere) {
  for (int k = 1; k < 180; ++k) {
    const double theta = pi * k / 180.0;
    const double t = max_overlap_transverse(theta), l = max_overlap_longitudinal(theta);
    if (k < 90) EXPECT_GT(t, l) << k;
    if (k > 90) EXPECT_LT(t, l) << k;
  }
}

TEST(ClosedForms, MonotoneInTheta) {
  double prev_l = 0.0, prev_t = 0.0;
  for (int k = 1; k <= 400; ++k) {
    const double theta = pi * k / 400.0;
    EXPECT_GT(max_overlap_longitudinal(theta), prev_l);
    EXPECT_GT(max_overlap_transverse(theta), prev_t);
    prev_l = max_overlap_longitudinal(theta);
    prev_t = max_overlap_transverse(theta);
  }
}

TEST(OptimalProfile, HalfAtHemisphere) {
  const auto opt = optimal_profile(pi / 2);
  EXPECT_NEAR(opt.content, 0.5, 1e-12);
  EXPECT_EQ(opt.alpha.size(), opt.amplitude.size());
  for (double a : opt.alpha) EXPECT_LE(a, pi / 2);
}

TEST(OptimalProfile, DominatesQuabis) {
  for (double theta : {0.5, 1.0, pi / 2, 2.2, pi}) {
    const double best = optimal_profile(theta).content;
    EXPECT_NEAR(best, max_overlap_longitudinal(theta), 1e-10);
    for (double a : {0.0, 0.5, 1.0, 2.0}) {
      EXPECT_LE(dipole_overlap(spectra::quabis_spectrum(a, theta), 0).content, best + 1e-12)
          << "a=" << a << " theta=" << theta;
    }
  }
}

TEST(OptimalProfileProperty, RandomPerturbationsNeverBeatOptimum) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> coef(0.0, 0.3);
  std::uniform_real_distribution<double> ut(0.2, pi);
  const QuadratureOptions q{.n_alpha = 64};
  for (int i = 0; i < 100; ++i) {
    const double theta = ut(rng);
    const double c1 = coef(rng), c2 = coef(rng), c3 = coef(rng);
    auto profile = [=](double a) {
      return std::sin(a) * (1.0 + c1 * a + c2 * std::cos(3.0 * a)) + c3 * std::sin(2.0 * a);
    };
    const auto s = spectra::profile_spectrum(theta, profile, q);
    EXPECT_LE(dipole_overlap(s, 0, {.quadrature = q}).content,
              max_overlap_longitudinal(theta) + 1e-12)
        << "theta=" << theta;
  }
}

TEST(EtaGap, Examples) {
  EXPECT_DOUBLE_EQ(eta_gap_from_overlap(1.0, 1.0), 0.0);
  EXPECT_NEAR(eta_gap_from_overlap(0.5, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(eta_gap_from_overlap(64.0 / 147.0, 1.0), std::sqrt(83.0 / 64.0), 1e-15);
  EXPECT_NEAR(eta_gap_from_overlap(0.5, 2.5), 2.5, 1e-15);
  EXPECT_THROW(eta_gap_from_overlap(0.0, 1.0), divergence_error);
  EXPECT_THROW(eta_gap_from_overlap(1.5, 1.0), domain_error);
  EXPECT_THROW(eta_gap_from_overlap(0.5, -1.0), domain_error);
}

}  // namespace
}  // namespace dipolewave::overlap
