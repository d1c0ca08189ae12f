#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dipolewave/direction.hpp"
#include "dipolewave/vec3.hpp"

namespace dipolewave::overlap {

/// Node counts used for every cap integral. The polar count applies per
/// polar segment: caps wider than a hemisphere are split at alpha = pi/2.
struct QuadratureOptions {
  int n_alpha = 128;
  int n_beta = 256;
  unsigned threads = 1;
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Product rule over the cap 0 <= alpha <= theta.
///
/// The polar rule is Gauss-Legendre composed with the end-point grading map
/// t -> 3t^2 - 2t^3 on each segment. The grading turns the sqrt|cos(alpha)|
/// factor of aplanatic profiles into an analytic integrand so convergence
/// stays spectral. The sin(alpha) Jacobian is folded into the polar weights.
/// The azimuthal rule is the periodic trapezoid rule.
class QuadratureGrid {
 public:
  explicit QuadratureGrid(double theta, const QuadratureOptions& options = {});

  double theta() const { return theta_; }
  int n_alpha() const { return n_alpha_; }
  int n_beta() const { return n_beta_; }
  unsigned threads() const { return threads_; }

  std::span<const double> alpha_nodes() const { return alpha_; }
  std::span<const double> polar_weights() const { return polar_w_; }
  std::span<const double> beta_nodes() const { return beta_; }
  double beta_weight() const { return beta_w_; }

  /// Sum of all 2-D weights; equals 2 pi (1 - cos theta) to rounding.
  double cap_area() const;

 private:
  double theta_;
  int n_alpha_;
  int n_beta_;
  unsigned threads_;
  std::vector<double> alpha_;
  std::vector<double> polar_w_;
  std::vector<double> beta_;
  double beta_w_;
};

using CapIntegrand = std::function<complex(const spectra::Direction&)>;

/// Integral over beta in [0, 2 pi) and alpha in [0, theta] of
/// sin(alpha) * integrand. Rows are reduced in alpha order, so the result is
/// bitwise identical for any thread count. Throws numeric_error on a
/// non-finite integrand value.
complex cap_integrate(const CapIntegrand& integrand, const QuadratureGrid& grid);

/// Same integral for an azimuthally symmetric integrand f(alpha).
double polar_integrate(const std::function<double(double)>& f, const QuadratureGrid& grid);

}  // namespace dipolewave::overlap
