#include "nlstirap/stability.hpp"

#include <cmath>

#include "nlstirap/cpt.hpp"

namespace nlstirap {

FluctuationMatrices build_matrices(double omega_p, double omega_s, double u_aa,
                                   double delta_u) {
  const double chi = omega_p / omega_s;
  const double phi_a = cpt_state(chi).phi_a;
  const double shift = 2.0 * u_aa * phi_a * phi_a;

  Mat3 A = Mat3::Zero();
  A(0, 0) = shift;
  A(0, 1) = A(1, 0) = -omega_p * phi_a;
  A(1, 1) = -delta_u;
  A(1, 2) = A(2, 1) = -0.5 * omega_s;

  Mat3 B = Mat3::Zero();
  B(0, 0) = shift;  // the anomalous (pairing) coupling; sole nonlinearity

  Mat6 M;
  M.topLeftCorner<3, 3>() = A;
  M.topRightCorner<3, 3>() = -B;
  M.bottomLeftCorner<3, 3>() = B;
  M.bottomRightCorner<3, 3>() = -A;

  return {A, B, M, delta_u, std::sqrt(omega_s * omega_s + 8.0 * omega_p * omega_p)};
}

Spectrum excitation_frequencies(double omega_p, double omega_s, double u_aa,
                                double delta_u) {
  const double chi = omega_p / omega_s;
  const double phi_a = cpt_state(chi).phi_a;
  const double phi_a4 = phi_a * phi_a * phi_a * phi_a;
  const double oeff = std::sqrt(omega_s * omega_s + 8.0 * omega_p * omega_p);

  // share the q/4 intermediate so the a2 = a1^2 tie at delta_u = 0 is exact
  // in floating point and the resonance line classifies as stable
  const double quarter_q = 0.25 * (omega_s * oeff);
  const double a1 = quarter_q + 0.5 * delta_u * delta_u;
  const double a2 = quarter_q * quarter_q +
                    4.0 * u_aa * omega_p * omega_p * phi_a4 * delta_u;

  const std::complex<double> disc = std::sqrt(std::complex<double>(a1 * a1 - a2));
  return {std::sqrt(a1 + disc), std::sqrt(a1 - disc), a1, a2};
}

StabilityVerdict classify(double omega_p, double omega_s, double u_aa,
                          double delta_u) {
  const Spectrum sp = excitation_frequencies(omega_p, omega_s, u_aa, delta_u);
  const Region region = classify_from_invariants(sp.a1, sp.a2);
  const double growth = (region == Region::III)
                            ? 0.0
                            : std::max(std::abs(sp.omega1.imag()),
                                       std::abs(sp.omega2.imag()));
  return {region, sp, growth};
}

double region_boundary_root(double u_aa, double omega_p, double omega_s,
                            double phi_a) {
  const double q = omega_s * std::sqrt(omega_s * omega_s + 8.0 * omega_p * omega_p);
  const double c = 16.0 * u_aa * omega_p * omega_p * phi_a * phi_a * phi_a * phi_a;
  if (c == 0.0) return 0.0;
  const double cc = std::abs(c);
  const double sign = c > 0.0 ? 1.0 : -1.0;

  // f(x) = x^3 + q x - cc on [0, hi], f monotone; root <= min(cc/q, cbrt(cc))
  double lo = 0.0, hi = std::min(cc / q, std::cbrt(cc));
  double x = 0.5 * hi;
  for (int it = 0; it < 200; ++it) {
    const double f = x * x * x + q * x - cc;
    (f < 0.0 ? lo : hi) = x;
    const double step = f / (3.0 * x * x + q);
    double xn = x - step;
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // bisection safeguard
    if (std::abs(xn - x) <= 1e-16 * std::max(1.0, std::abs(xn))) {
      x = xn;
      break;
    }
    x = xn;
  }
  return sign * x;
}

Region classify_boundary_form(double omega_p, double omega_s, double u_aa,
                              double delta_u) {
  if (u_aa == 0.0) return Region::III;
  const double chi = omega_p / omega_s;
  const double phi_a = cpt_state(chi).phi_a;
  const double phi_a4 = phi_a * phi_a * phi_a * phi_a;
  const double oeff2 = omega_s * omega_s + 8.0 * omega_p * omega_p;

  // a2 = 0 locus: Delta_u = -Omega_s^2 Omega_eff^2 / (64 U_aa Omega_p^2 phi_a^4)
  const double threshold =
      -omega_s * omega_s * oeff2 / (64.0 * u_aa * omega_p * omega_p * phi_a4);
  if (u_aa > 0.0 ? (delta_u < threshold) : (delta_u > threshold)) return Region::I;

  const double x0 = region_boundary_root(u_aa, omega_p, omega_s, phi_a);
  const double lo = std::min(x0, 0.0), hi = std::max(x0, 0.0);
  if (delta_u > lo && delta_u < hi) return Region::II;
  return Region::III;
}

std::vector<double> growth_rate_trace(const PulseParams& pulses, double u_aa,
                                      double delta_u,
                                      const std::vector<double>& times) {
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    out.push_back(
        classify(omega_p(pulses, t), omega_s(pulses, t), u_aa, delta_u).growth);
  }
  return out;
}

}  // namespace nlstirap
