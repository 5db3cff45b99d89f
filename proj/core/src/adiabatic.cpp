#include "nlstirap/adiabatic.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include "nlstirap/cpt.hpp"
#include "nlstirap/modes.hpp"
#include "nlstirap/stability.hpp"

namespace nlstirap {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// 2-norm condition number of the projection system.
double cond_4x4(const Eigen::Matrix4cd& a) {
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv(3) <= 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / sv(3);
}

ProjectionResult finish(const Eigen::Matrix4cd& a, const Eigen::Vector4cd& rhs,
                        ProjectionRoute route) {
  ProjectionResult res;
  const Eigen::Vector4cd c = a.partialPivLu().solve(rhs);
  res.c1 = c(0);
  res.c2 = c(1);
  res.c1_star = c(2);
  res.c2_star = c(3);
  res.r = 0.5 * std::sqrt(std::norm(c(0)) + std::norm(c(1)));
  res.cond = cond_4x4(a);
  res.ill_conditioned = !(res.cond <= 1e10);
  res.route = route;
  return res;
}

}  // namespace

ProjectionResult projection_solve_full(double omega_p, double omega_s,
                                       double chi_dot, double u_aa,
                                       double delta_u, double gamma) {
  if (omega_s <= 0.0)
    throw std::domain_error("projection needs a positive Stokes drive");
  const double chi = omega_p / omega_s;

  const Spectrum sp =
      excitation_frequencies(omega_p, omega_s, u_aa, delta_u);
  const double a1sq = sp.a1 * sp.a1;
  if (std::abs(a1sq - sp.a2) < 1e-6 * std::max(a1sq, std::abs(sp.a2)))
    throw DegenerateSpectrum("spectrum at an exceptional point");

  const auto [m1, m2] = bogoliubov_modes(omega_p, omega_s, u_aa, delta_u);
  const CVec6 w1 = m1.w();
  const CVec6 w2 = m2.w();

  // Only the excited-state component is damped, so the loss couplings are
  // built from that entry of u and v alone.
  const std::complex<double> u1 = m1.u(1), v1 = m1.v(1);
  const std::complex<double> u2 = m2.u(1), v2 = m2.v(1);
  const std::complex<double> g11 = std::conj(u1) * u1 - std::conj(v1) * v1;
  const std::complex<double> g22 = std::conj(u2) * u2 - std::conj(v2) * v2;
  const std::complex<double> g12 = std::conj(u1) * u2 - std::conj(v1) * v2;
  const std::complex<double> f12 =
      std::conj(u1) * std::conj(v2) - std::conj(v1) * std::conj(u2);

  const std::complex<double> w1f = m1.omega;
  const std::complex<double> w2f = m2.omega;

  Eigen::Matrix4cd a;
  a(0, 0) = kI * std::conj(w1f) + gamma * g11;
  a(0, 1) = gamma * g12;
  a(0, 2) = 0.0;
  a(0, 3) = -gamma * f12;
  a(1, 0) = gamma * std::conj(g12);
  a(1, 1) = kI * std::conj(w2f) + gamma * g22;
  a(1, 2) = gamma * f12;
  a(1, 3) = 0.0;
  a(2, 0) = 0.0;
  a(2, 1) = -gamma * std::conj(f12);
  a(2, 2) = gamma * std::conj(g11) - kI * w1f;
  a(2, 3) = gamma * std::conj(g12);
  a(3, 0) = gamma * std::conj(f12);
  a(3, 1) = 0.0;
  a(3, 2) = gamma * g12;
  a(3, 3) = gamma * std::conj(g22) - kI * w2f;

  const CptRate rate = cpt_rate(chi, chi_dot);
  CVec6 ldot;
  ldot << rate.phi_a_dot, 0.0, rate.phi_g_dot, rate.phi_a_dot, 0.0,
      rate.phi_g_dot;

  Eigen::Vector4cd rhs;
  rhs(0) = -w1.dot(ldot);              // dagger rows: conjugated mode
  rhs(1) = -w2.dot(ldot);
  rhs(2) = -w1.conjugate().dot(ldot);  // transpose rows: plain bilinear
  rhs(3) = -w2.conjugate().dot(ldot);

  return finish(a, rhs, ProjectionRoute::full);
}

ProjectionResult projection_solve_reduced(double omega_p, double omega_s,
                                          double chi_dot, double u_aa,
                                          double gamma) {
  if (omega_s <= 0.0)
    throw std::domain_error("projection needs a positive Stokes drive");
  const double chi = omega_p / omega_s;
  const double s = cpt_s(chi);
  const double phi_a2 = 2.0 / (1.0 + s);
  const double oeff =
      std::sqrt(omega_s * omega_s + 8.0 * omega_p * omega_p);
  const double soeff = omega_s * oeff;

  // Collision-dressed doublet couplings of the resonant three-mode problem.
  const double core = 8.0 * u_aa * omega_p * omega_p * phi_a2 * phi_a2;
  const double k_plus = (core + std::pow(soeff, 1.5)) / (2.0 * soeff);
  const double k_minus = (core - std::pow(soeff, 1.5)) / (2.0 * soeff);
  const double k_zero = 0.5 * core / soeff;

  Eigen::Matrix2d cmat;
  cmat << k_minus, k_zero, k_zero, k_plus;
  Eigen::Matrix2d dmat = Eigen::Matrix2d::Constant(k_zero);
  Eigen::Matrix2d gmat;
  gmat << 0.5 * gamma, -0.5 * gamma, -0.5 * gamma, 0.5 * gamma;

  Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
  a.topLeftCorner<2, 2>() = kI * cmat + gmat.cast<std::complex<double>>();
  a.topRightCorner<2, 2>() = kI * dmat;
  a.bottomLeftCorner<2, 2>() = -kI * dmat;
  a.bottomRightCorner<2, 2>() =
      -kI * cmat + gmat.cast<std::complex<double>>();

  const ReducedModes rm = reduced_modes_on_resonance(omega_p, omega_s);
  const CptRate rate = cpt_rate(chi, chi_dot);
  const Eigen::Vector3d ldot(rate.phi_a_dot, 0.0, rate.phi_g_dot);
  const double pi_plus = rm.w_plus.dot(ldot);
  const double pi_minus = rm.w_minus.dot(ldot);

  Eigen::Vector4cd rhs;
  rhs << -pi_plus, -pi_minus, -pi_plus, -pi_minus;

  return finish(a, rhs, ProjectionRoute::reduced);
}

ProjectionResult projection_solve(const PulseParams& pulses, double t,
                                  double u_aa, double delta_u, double gamma) {
  const double op = omega_p(pulses, t);
  const double os = omega_s(pulses, t);
  const Mixing mx = mixing_ratio(pulses, t);
  if (std::abs(delta_u) <= kNearResonanceHalfWidth)
    return projection_solve_reduced(op, os, mx.chi_dot, u_aa, gamma);
  return projection_solve_full(op, os, mx.chi_dot, u_aa, delta_u, gamma);
}

double analytic_r(double chi, double chi_dot, double omega_p, double omega_s,
                  double u_aa, double gamma) {
  if (omega_s <= 0.0)
    throw std::domain_error("analytic r needs a positive Stokes drive");
  const double s = cpt_s(chi);
  const double oeff =
      std::sqrt(omega_s * omega_s + 8.0 * omega_p * omega_p);

  double eta = 0.0;
  if (omega_p > 0.0 && u_aa != 0.0 && gamma != 0.0) {
    // 1 - 1/s written as 8 chi^2 / (s (s+1)) to avoid cancellation.
    const double m = 8.0 * chi * chi / (s * (s + 1.0));
    eta = std::pow(m, 4) * 16.0 * u_aa * u_aa * gamma * gamma /
          std::pow(omega_p, 4);
  }

  const double num = std::sqrt((4.0 * gamma * gamma + omega_s * oeff) *
                               (1.0 + eta)) *
                     std::abs(chi_dot);
  const double den =
      std::sqrt(omega_s) * std::pow(oeff, 1.5) * 0.5 * (1.0 + s);
  return num / den;
}

double analytic_r(const PulseParams& pulses, double t, double u_aa,
                  double gamma) {
  const Mixing mx = mixing_ratio(pulses, t);
  return analytic_r(mx.chi, mx.chi_dot, omega_p(pulses, t),
                    omega_s(pulses, t), u_aa, gamma);
}

ReducedModes reduced_modes_on_resonance(double omega_p, double omega_s) {
  if (omega_s <= 0.0)
    throw std::domain_error("reduced modes need a positive Stokes drive");
  const double chi = omega_p / omega_s;
  const double s = cpt_s(chi);
  const double phi_a = std::sqrt(2.0 / (1.0 + s));
  const double oeff =
      std::sqrt(omega_s * omega_s + 8.0 * omega_p * omega_p);
  const double soeff = omega_s * oeff;

  ReducedModes rm;
  rm.omega = 0.5 * std::sqrt(soeff);
  rm.w0 =
      Eigen::Vector3d(-omega_s, 0.0, 2.0 * phi_a * omega_p) / std::sqrt(soeff);
  rm.w_plus = Eigen::Vector3d(2.0 * phi_a * omega_p, std::sqrt(soeff),
                              omega_s) /
              std::sqrt(2.0 * soeff);
  rm.w_minus = Eigen::Vector3d(2.0 * phi_a * omega_p, -std::sqrt(soeff),
                               omega_s) /
               std::sqrt(2.0 * soeff);
  return rm;
}

}  // namespace nlstirap
