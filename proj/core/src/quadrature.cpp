#include "dipolewave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "dipolewave/errors.hpp"

namespace dipolewave::overlap {

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw domain_error("gauss_legendre: node count must be positive");

  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [pn, pnm1] = legendre_pair(n, x);
      const double dx = pn / (n * (x * pn - pnm1) / (x * x - 1.0));
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    const auto [pn, pnm1] = legendre_pair(n, x);
    const double dp = n * (x * pn - pnm1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);

    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureGrid::QuadratureGrid(double theta, const QuadratureOptions& options)
    : theta_(theta),
      n_alpha_(options.n_alpha),
      n_beta_(options.n_beta),
      threads_(std::max(1u, options.threads)) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta > pi) {
    throw domain_error("QuadratureGrid: cap half-angle must lie in (0, pi]");
  }
  if (n_alpha_ < 2 || n_beta_ < 1) {
    throw domain_error("QuadratureGrid: need n_alpha >= 2 and n_beta >= 1");
  }

  const GaussLegendreRule gl = gauss_legendre(n_alpha_);

  std::vector<std::pair<double, double>> segments;
  if (theta > pi / 2) {
    segments = {{0.0, pi / 2}, {pi / 2, theta}};
  } else {
    segments = {{0.0, theta}};
  }

  for (const auto& [lo, hi] : segments) {
    const double len = hi - lo;
    for (int i = 0; i < n_alpha_; ++i) {
      const double t = 0.5 * (gl.nodes[i] + 1.0);
      const double graded = t * t * (3.0 - 2.0 * t);
      const double jac = 6.0 * t * (1.0 - t);
      const double alpha = lo + len * graded;
      alpha_.push_back(alpha);
      polar_w_.push_back(0.5 * gl.weights[i] * len * jac * std::sin(alpha));
    }
  }

  beta_w_ = two_pi / n_beta_;
  beta_.resize(n_beta_);
  for (int j = 0; j < n_beta_; ++j) beta_[j] = beta_w_ * j;
}

double QuadratureGrid::cap_area() const {
  double sum = 0.0;
  for (double w : polar_w_) sum += w;
  return sum * beta_w_ * n_beta_;
}

namespace {

complex row_sum(const CapIntegrand& integrand, double alpha, std::span<const double> betas) {
  complex acc = 0.0;
  for (double beta : betas) {
    const complex v = integrand(spectra::Direction(alpha, beta));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "cap_integrate: non-finite integrand at alpha=" << alpha << " beta=" << beta;
      throw numeric_error(msg.str());
    }
    acc += v;
  }
  return acc;
}

}  // namespace

complex cap_integrate(const CapIntegrand& integrand, const QuadratureGrid& grid) {
  const auto alphas = grid.alpha_nodes();
  const auto betas = grid.beta_nodes();
  const std::size_t rows = alphas.size();
  std::vector<complex> row(rows);

  const unsigned threads = std::min<unsigned>(grid.threads(), static_cast<unsigned>(rows));
  if (threads <= 1) {
    for (std::size_t i = 0; i < rows; ++i) row[i] = row_sum(integrand, alphas[i], betas);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t i = t; i < rows; i += threads) {
              row[i] = row_sum(integrand, alphas[i], betas);
            }
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  const auto weights = grid.polar_weights();
  complex sum = 0.0;
  for (std::size_t i = 0; i < rows; ++i) sum += weights[i] * row[i];
  return sum * grid.beta_weight();
}

double polar_integrate(const std::function<double(double)>& f, const QuadratureGrid& grid) {
  const auto alphas = grid.alpha_nodes();
  const auto weights = grid.polar_weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double v = f(alphas[i]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "polar_integrate: non-finite integrand at alpha=" << alphas[i];
      throw numeric_error(msg.str());
    }
    sum += weights[i] * v;
  }
  return two_pi * sum;
}

}  // namespace dipolewave::overlap
