#pragma once
// Linear stability of the dark state.  Fluctuations delta-psi around the CPT
// solution obey a 6x6 Bogoliubov problem M = [[A,-B],[B,-A]]; the spectrum
// {0, 0, +-omega1, +-omega2} is available in closed form,
//   omega_{1,2} = sqrt(a1 +- sqrt(a1^2 - a2)),
//   a1 = Omega_s Omega_eff/4 + Delta_u^2/2,
//   a2 = Omega_s^2 Omega_eff^2/16 + 4 U_aa Omega_p^2 phi_a^4 Delta_u,
// with Omega_eff = sqrt(Omega_s^2 + 8 Omega_p^2).  Complex omega flags
// dynamical instability: region I (a2 < 0), region II (a2 > a1^2),
// region III stable.

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "nlstirap/pulses.hpp"

namespace nlstirap {

using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

struct FluctuationMatrices {
  Mat3 A, B;
  Mat6 M;
  double delta_u;
  double omega_eff;
};

FluctuationMatrices build_matrices(double omega_p, double omega_s, double u_aa,
                                   double delta_u);

struct Spectrum {
  std::complex<double> omega1, omega2;  // principal branches; omega1 carries +sqrt
  double a1, a2;
};

Spectrum excitation_frequencies(double omega_p, double omega_s, double u_aa,
                                double delta_u);

enum class Region : int { I = 1, II = 2, III = 3 };

// inequality form; boundaries (a2 = 0, a2 = a1^2) count as stable
inline Region classify_from_invariants(double a1, double a2) {
  if (a2 < 0.0) return Region::I;
  if (a2 > a1 * a1) return Region::II;
  return Region::III;
}

struct StabilityVerdict {
  Region region;
  Spectrum spectrum;
  double growth;  // largest |Im omega| over both branches; 0 in region III
};

StabilityVerdict classify(double omega_p, double omega_s, double u_aa, double delta_u);

// real root of x^3 + Omega_s Omega_eff x - 16 U_aa Omega_p^2 phi_a^4 = 0
// (monotone cubic: exactly one), safeguarded Newton
double region_boundary_root(double u_aa, double omega_p, double omega_s, double phi_a);

// independent classification from the analytic boundaries: region I below the
// negative a2=0 threshold (mirrored for U_aa<0), region II inside
// (min(x0,0), max(x0,0)); used to cross-check the inequality form cell by cell
Region classify_boundary_form(double omega_p, double omega_s, double u_aa,
                              double delta_u);

std::vector<double> growth_rate_trace(const PulseParams& pulses, double u_aa,
                                      double delta_u, const std::vector<double>& times);

}  // namespace nlstirap
