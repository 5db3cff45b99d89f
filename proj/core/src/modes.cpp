#include "nlstirap/modes.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "nlstirap/cpt.hpp"

namespace nlstirap {

namespace {
using CMat6 = Eigen::Matrix<std::complex<double>, 6, 6>;

Mat6 make_eta_plus() {
  Mat6 m = Mat6::Zero();
  m.topLeftCorner<3, 3>() = Mat3::Identity();
  m.bottomRightCorner<3, 3>() = -Mat3::Identity();
  return m;
}
Mat6 make_eta_minus() {
  Mat6 m = Mat6::Zero();
  m.topRightCorner<3, 3>() = Mat3::Identity();
  m.bottomLeftCorner<3, 3>() = -Mat3::Identity();
  return m;
}
}  // namespace

const Mat6& eta_plus() {
  static const Mat6 m = make_eta_plus();
  return m;
}
const Mat6& eta_minus() {
  static const Mat6 m = make_eta_minus();
  return m;
}

std::pair<BogoliubovMode, BogoliubovMode> bogoliubov_modes(double omega_p,
                                                           double omega_s,
                                                           double u_aa,
                                                           double delta_u) {
  const FluctuationMatrices fm = build_matrices(omega_p, omega_s, u_aa, delta_u);
  const Spectrum sp = excitation_frequencies(omega_p, omega_s, u_aa, delta_u);
  const double scale = fm.M.norm();

  if (std::abs(sp.omega1 - sp.omega2) < 1e-6 * scale)
    throw DegenerateSpectrum("exceptional point: omega1 ~ omega2");
  if (std::abs(sp.omega1) < 1e-6 * scale || std::abs(sp.omega2) < 1e-6 * scale)
    throw DegenerateSpectrum("mode frequency collides with the Goldstone zero");

  const CMat6 M = fm.M.cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<CMat6> es(M);
  if (es.info() != Eigen::Success)
    throw DegenerateSpectrum("eigensolver failed to converge");

  auto extract = [&](std::complex<double> target) {
    int best = 0;
    double dist = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 6; ++k) {
      const double d = std::abs(es.eigenvalues()[k] - target);
      if (d < dist) {
        dist = d;
        best = k;
      }
    }
    CVec6 w = es.eigenvectors().col(best);
    // two rounds of inverse iteration at the exact closed-form frequency;
    // keeps bilinear-normalized vectors accurate near Krein collisions
    const std::complex<double> shift =
        target + std::complex<double>(1e-10 * (1.0 + std::abs(target)), 0.0);
    for (int round = 0; round < 2; ++round) {
      CMat6 S = M;
      S.diagonal().array() -= shift;
      w = Eigen::PartialPivLU<CMat6>(S).solve(w);
      w.normalize();
    }
    const std::complex<double> nb = w.transpose() * (eta_plus() * w);
    if (std::abs(nb) < 1e-8)
      throw DegenerateSpectrum("bilinear norm vanishes: mode not normalizable");
    w /= std::sqrt(nb);

    BogoliubovMode mode;
    mode.omega = target;
    mode.u = w.head<3>();
    mode.v = w.tail<3>();
    return mode;
  };

  return {extract(sp.omega1), extract(sp.omega2)};
}

GoldstonePair goldstone_pair(double omega_p, double omega_s, double u_aa,
                             double delta_u) {
  const double chi = omega_p / omega_s;
  const double phi_a = cpt_state(chi).phi_a;
  const double oeff = std::sqrt(omega_s * omega_s + 8.0 * omega_p * omega_p);

  Eigen::Vector3d p3(0.5 * omega_s, 0.0, -omega_p * phi_a);
  GoldstonePair out;
  out.P.head<3>() = p3;
  out.P.tail<3>() = p3;

  if (std::abs(u_aa) < 1e-8) {
    // collisionless limit: the zero eigenvalue turns semisimple and the
    // printed q's collapse onto p; normalization survives because
    // Omega_s^2 + 4 Omega_p^2 phi_a^2 = Omega_s Omega_eff identically
    const Eigen::Vector3d q3 = 2.0 / (omega_s * oeff) * p3;
    out.Q.head<3>() = q3;
    out.Q.tail<3>() = -q3;
    out.nu = std::numeric_limits<double>::infinity();
    return out;
  }

  const double phi_a2 = phi_a * phi_a;
  const double nu = (64.0 * u_aa * phi_a2 * phi_a2 * chi * chi * delta_u +
                     oeff * oeff) /
                    (8.0 * u_aa * phi_a2);
  if (std::abs(nu) < 1e-10)
    throw DegenerateSpectrum("Goldstone pair singular: nu ~ 0");
  const double q_a = oeff / (8.0 * nu * u_aa * phi_a2);
  const double q_e = 2.0 * chi * phi_a / nu;
  const double q_g = -(16.0 * u_aa * phi_a2 * chi * delta_u + omega_p * oeff) /
                     (4.0 * nu * u_aa * phi_a * omega_s);
  out.Q << q_a, q_e, q_g, -q_a, -q_e, -q_g;
  out.nu = nu;
  return out;
}

}  // namespace nlstirap
