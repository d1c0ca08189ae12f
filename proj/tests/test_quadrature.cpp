#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "dipolewave/errors.hpp"
#include "dipolewave/quadrature.hpp"
#include "oracles.hpp"

namespace dipolewave::overlap {
namespace {

using spectra::Direction;

TEST(GaussLegendre, LowOrderRulesMatchTables) {
  const auto r2 = gauss_legendre(2);
  EXPECT_NEAR(r2.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r2.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r2.weights[0], 1.0, 1e-15);

  const auto r3 = gauss_legendre(3);
  EXPECT_EQ(r3.nodes[1], 0.0);
  EXPECT_NEAR(r3.nodes[2], std::sqrt(0.6), 1e-15);
  EXPECT_NEAR(r3.weights[1], 8.0 / 9.0, 1e-15);
  EXPECT_NEAR(r3.weights[0], 5.0 / 9.0, 1e-15);
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
  for (int n : {5, 16, 64, 128}) {
    const auto rule = gauss_legendre(n);
    for (int k = 0; k <= 2 * n - 1; k += 3) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
      const double exact = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
      EXPECT_NEAR(sum, exact, 1e-13) << "n=" << n << " k=" << k;
    }
  }
}

TEST(GaussLegendre, RejectsNonPositiveCount) { EXPECT_THROW(gauss_legendre(0), domain_error); }

TEST(QuadratureGrid, WeightsPositiveAndSumToCapArea) {
  for (double theta : {0.01, 0.3, pi / 4, pi / 2, 2.0, 2.9, pi}) {
    const QuadratureGrid grid(theta);
    for (double w : grid.polar_weights()) EXPECT_GT(w, 0.0);
    EXPECT_NEAR(grid.cap_area(), two_pi * (1.0 - std::cos(theta)), 1e-10) << theta;
  }
}

TEST(QuadratureGrid, SplitsWideCapsAtEquator) {
  EXPECT_EQ(QuadratureGrid(pi / 2).alpha_nodes().size(), 128u);
  EXPECT_EQ(QuadratureGrid(2.0).alpha_nodes().size(), 256u);
}

TEST(QuadratureGrid, RejectsBadCaps) {
  EXPECT_THROW(QuadratureGrid(0.0), domain_error);
  EXPECT_THROW(QuadratureGrid(-1.0), domain_error);
  EXPECT_THROW(QuadratureGrid(4.0), domain_error);
  EXPECT_THROW(QuadratureGrid(1.0, {.n_alpha = 1}), domain_error);
}

TEST(CapIntegrate, SphereAndHemisphereAreas) {
  auto one = [](const Direction&) { return complex(1.0, 0.0); };
  EXPECT_NEAR(cap_integrate(one, QuadratureGrid(pi)).real(), 4.0 * pi, 1e-10);
  EXPECT_NEAR(cap_integrate(one, QuadratureGrid(pi / 2)).real(), 2.0 * pi, 1e-10);
}

TEST(CapIntegrate, LongitudinalDipoleEnergyOnHemisphere) {
  // (3/8pi) sin^2 is |Phi_0|^2; its hemisphere integral is
  // (3/4)(2/3 - cos + cos^3/3) at theta = pi/2, i.e. 1/2.
  auto f = [](const Direction& d) {
    const double s = std::sin(d.alpha());
    return complex(3.0 / (8.0 * pi) * s * s, 0.0);
  };
  EXPECT_NEAR(cap_integrate(f, QuadratureGrid(pi / 2)).real(), 0.5, 1e-10);

  // Same integrand scaled by 2pi: (3/4) sin^2 integrates to pi.
  auto g = [](const Direction& d) {
    const double s = std::sin(d.alpha());
    return complex(0.75 * s * s, 0.0);
  };
  EXPECT_NEAR(cap_integrate(g, QuadratureGrid(pi / 2)).real(), pi, 1e-10);
}

TEST(CapIntegrate, AgreesWithTanhSinhReferenceOnSqrtCosIntegrand) {
  auto f = [](const Direction& d) {
    const double c = std::cos(d.alpha());
    return complex(std::sqrt(std::abs(c)) * (1.0 + std::cos(d.beta()) * std::cos(d.beta())),
                   std::sin(d.alpha()) * std::sin(2.0 * d.beta()));
  };
  for (double theta : {pi / 2, 2.4, pi}) {
    const complex got = cap_integrate(f, QuadratureGrid(theta));
    const complex want = testing::cap_reference(f, theta);
    EXPECT_NEAR(got.real(), want.real(), 1e-11) << theta;
    EXPECT_NEAR(got.imag(), want.imag(), 1e-11) << theta;
  }
}

TEST(CapIntegrate, NonFiniteIntegrandReportsNode) {
  auto bad = [](const Direction& d) {
    return complex(d.alpha() > 1.0 ? std::numeric_limits<double>::quiet_NaN() : 1.0, 0.0);
  };
  try {
    cap_integrate(bad, QuadratureGrid(pi / 2));
    FAIL() << "expected numeric_error";
  } catch (const numeric_error& e) {
    EXPECT_NE(std::string(e.what()).find("alpha="), std::string::npos);
  }
  EXPECT_THROW(cap_integrate(bad, QuadratureGrid(pi / 2, {.threads = 4})), numeric_error);
}

TEST(CapIntegrate, ThreadCountDoesNotChangeBits) {
  auto f = [](const Direction& d) {
    return complex(std::exp(-std::sin(d.alpha())) * std::cos(d.beta() + 0.3), std::cos(d.alpha()));
  };
  const complex serial = cap_integrate(f, QuadratureGrid(2.2));
  for (unsigned t : {2u, 3u, 8u}) {
    const complex par = cap_integrate(f, QuadratureGrid(2.2, {.threads = t}));
    EXPECT_EQ(serial.real(), par.real());
    EXPECT_EQ(serial.imag(), par.imag());
  }
}

TEST(PolarIntegrate, MatchesTwoDimensionalRule) {
  auto radial = [](double a) { return std::sin(a) * std::sqrt(std::abs(std::cos(a))); };
  for (double theta : {0.4, pi / 2, 2.5, pi}) {
    const QuadratureGrid grid(theta);
    const double one_d = polar_integrate(radial, grid);
    const double two_d =
        cap_integrate([&](const Direction& d) { return complex(radial(d.alpha()), 0.0); }, grid).real();
    EXPECT_NEAR(one_d, two_d, 1e-12 * std::abs(one_d));
  }
}

}  // namespace
}  // namespace dipolewave::overlap
