#include "dipolewave/regression_oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <unsupported/Eigen/MatrixFunctions>

#include "dipolewave/errors.hpp"

namespace dipolewave::oracle {

namespace {

Matrix2c sigma_minus() {
  Matrix2c m = Matrix2c::Zero();
  m(0, 1) = 1.0;
  return m;
}

// Column-major vec: vec(A X B) = (B^T kron A) vec(X).
Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return k;
}

// C = f + D sqrt(Gamma) sigma^- acting on the atom.
Matrix2c detection_operator(complex f, complex d, double gamma) {
  return f * Matrix2c::Identity() + d * std::sqrt(gamma) * sigma_minus();
}

struct Conditional {
  LiouvillianMap L;
  Matrix2c rho_ss;
  Matrix2c c;
  double flux;
  double flux0;
};

Conditional prepare(const stats::DetectionChannel& channel, complex eta,
                    const bloch::DriveAmplitude& drive, const bloch::AtomParams& atom) {
  Conditional out{build_liouvillian(atom, drive), {}, {}, 0.0, 0.0};
  out.rho_ss = steady_density(out.L).entries();
  const complex d = channel.d_factor();
  out.c = detection_operator(d * eta * drive.beta, d, atom.gamma());
  out.flux = (out.c.adjoint() * out.c * out.rho_ss).trace().real();
  out.flux0 = std::norm(d * drive.beta);
  return out;
}

}  // namespace

DensityMatrix2::DensityMatrix2(const Matrix2c& entries) : rho_(entries) {
  if (!rho_.allFinite()) throw numeric_error("DensityMatrix2: non-finite entries");
}

DensityMatrix2 DensityMatrix2::ground() {
  Matrix2c m = Matrix2c::Zero();
  m(0, 0) = 1.0;
  return DensityMatrix2(m);
}

DensityMatrix2 DensityMatrix2::from_bloch(const bloch::BlochState& state) {
  Matrix2c m;
  m(0, 0) = 0.5 * (1.0 - state.sz);
  m(1, 1) = 0.5 * (1.0 + state.sz);
  m(1, 0) = state.sm;
  m(0, 1) = std::conj(state.sm);
  return DensityMatrix2(m);
}

double DensityMatrix2::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix2::trace_error() const { return std::abs(rho_.trace() - 1.0); }

double DensityMatrix2::min_eigenvalue() const {
  const Matrix2c h = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix2c> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

Vector4c vectorize(const Matrix2c& rho) {
  return Eigen::Map<const Vector4c>(rho.data());
}

Matrix2c unvectorize(const Vector4c& v) { return Eigen::Map<const Matrix2c>(v.data()); }

Matrix2c LiouvillianMap::propagate(const Matrix2c& rho, double tau) const {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw domain_error("propagate: tau must be >= 0");
  if (tau == 0.0) return rho;
  const Matrix4c step = (matrix * tau).exp();
  return unvectorize(step * vectorize(rho));
}

LiouvillianMap build_liouvillian(const bloch::AtomParams& atom, const bloch::DriveAmplitude& drive) {
  using namespace std::complex_literals;
  const double g = atom.gamma();
  const complex b = drive.beta;
  const Matrix2c sm = sigma_minus();
  const Matrix2c sp = sm.adjoint();
  const Matrix2c n = sp * sm;
  const Matrix2c id = Matrix2c::Identity();

  const Matrix2c h = -atom.detuning() * n + 1i * std::sqrt(g) * (std::conj(b) * sm - b * sp);

  Matrix4c L = -1i * (kron(id, h) - kron(h.transpose(), id));
  L += g * (kron(sp.transpose(), sm) - 0.5 * kron(id, n) - 0.5 * kron(n.transpose(), id));
  return {L, g, atom.detuning(), b};
}

DensityMatrix2 steady_density(const LiouvillianMap& L) {
  Matrix4c a = L.matrix;
  // Replace one equation by the trace condition rho_gg + rho_ee = 1.
  a.row(0) << 1.0, 0.0, 0.0, 1.0;
  Vector4c rhs = Vector4c::Zero();
  rhs(0) = 1.0;

  Eigen::FullPivLU<Matrix4c> lu(a);
  if (lu.rank() < 4 || lu.rcond() < 1e-13) {
    throw numeric_error("steady_density: generator null space is not one-dimensional");
  }
  Matrix2c rho = unvectorize(lu.solve(rhs));
  rho = 0.5 * (rho + rho.adjoint()).eval();
  rho /= rho.trace();
  return DensityMatrix2(rho);
}

double flux_exact(const stats::DetectionChannel& channel, complex eta,
                  const bloch::DriveAmplitude& drive, const bloch::AtomParams& atom) {
  return prepare(channel, eta, drive, atom).flux;
}

double flux_ratio_exact(const stats::DetectionChannel& channel, complex eta,
                        const bloch::DriveAmplitude& drive, const bloch::AtomParams& atom) {
  const Conditional c = prepare(channel, eta, drive, atom);
  if (c.flux0 == 0.0) throw undefined_error("flux ratio undefined: F0 = |D beta|^2 = 0");
  return c.flux / c.flux0;
}

std::vector<Outcome> g2_exact_curve(const stats::DetectionChannel& channel, complex eta,
                                    const bloch::DriveAmplitude& drive,
                                    const bloch::AtomParams& atom, std::span<const double> taus) {
  const Conditional c = prepare(channel, eta, drive, atom);
  std::vector<Outcome> out;
  out.reserve(taus.size());
  if (c.flux0 == 0.0 || c.flux / c.flux0 < kUndefinedFluxRatio) {
    out.assign(taus.size(), Outcome::undefined());
    return out;
  }

  const Matrix2c collapsed = c.c * c.rho_ss * c.c.adjoint();
  const Matrix2c intensity = c.c.adjoint() * c.c;
  for (double tau : taus) {
    const Matrix2c later = c.L.propagate(collapsed, tau);
    const double g2 = (intensity * later).trace().real() / (c.flux * c.flux);
    out.push_back(Outcome::finite(std::max(g2, 0.0)));
  }
  return out;
}

double g2_exact(const stats::DetectionChannel& channel, complex eta,
                const bloch::DriveAmplitude& drive, const bloch::AtomParams& atom, double tau) {
  const double taus[] = {tau};
  const Outcome g2 = g2_exact_curve(channel, eta, drive, atom, taus).front();
  if (!g2.is_finite()) {
    throw undefined_error("g2 undefined: detected flux vanishes (F/F0 < 1e-8)");
  }
  return g2.value;
}

double g2_weak_limit_check(std::span<const complex> eta_grid) {
  const auto channel = stats::DetectionChannel::side_view();
  const bloch::AtomParams atom(1.0, 0.0);
  const auto drive = bloch::DriveAmplitude::from_saturation(1e-4, atom);

  double worst = 0.0;
  for (const complex eta : eta_grid) {
    if (std::abs(eta - 2.0) < 0.1) {
      throw domain_error("g2_weak_limit_check: grid must avoid |eta - 2| < 0.1");
    }
    const double closed = stats::weak_drive_g2(eta);
    const double exact = g2_exact(channel, eta, drive, atom, 0.0);
    worst = std::max(worst, std::abs(exact - closed) / std::max(closed, 1.0));
  }
  return worst;
}

}  // namespace dipolewave::oracle
