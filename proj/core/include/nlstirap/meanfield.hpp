#pragma once
// Three-level atom-molecule mean-field dynamics.  Amplitudes (psi_a, psi_e,
// psi_g) with molecules counting double: N = |psi_a|^2 + 2|psi_e|^2 + 2|psi_g|^2.
//   psi_a' = i [ Omega_p psi_a* psi_e - 2 U_aa |psi_a|^2 psi_a - 2 U_ag |psi_g|^2 psi_a ]
//   psi_e' = i [ (Delta + i gamma) psi_e + (Omega_p/2) psi_a^2 + (Omega_s/2) psi_g ]
//   psi_g' = i [ delta psi_g + (Omega_s/2) psi_e - (2 U_ag |psi_a|^2 + 2 U_gg |psi_g|^2) psi_g ]
// gamma is phenomenological excited-molecule loss; U_ag/U_gg default 0.

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "nlstirap/cpt.hpp"
#include "nlstirap/pulses.hpp"

namespace nlstirap {

using Amplitudes = Eigen::Vector3cd;

struct SystemParams {
  double u_aa = 0.0;   // atom-atom collisional strength (rad/us)
  double gamma = 0.0;  // excited-state loss (rad/us)
  double u_ag = 0.0;   // optional atom-molecule term
  double u_gg = 0.0;   // optional molecule-molecule term
  PulseParams pulses;
  DetuningPolicy detuning;
};

struct DrivePoint {
  double omega_p, omega_s;
  double Delta;  // single-photon detuning actually applied at t
  double delta;  // two-photon detuning actually applied at t
};

// Resolve the programmed detunings at time t (chirps follow the dark-state
// phi_a^2 at the instantaneous chi, not the evolving field).
DrivePoint drive_at(const SystemParams& p, double t);

Amplitudes meanfield_rhs(double t, const Amplitudes& psi, const SystemParams& p);

struct Populations {
  double p_a, p_e, p_g;
};
inline Populations populations(const Amplitudes& psi) {
  return {std::norm(psi[0]), 2.0 * std::norm(psi[1]), 2.0 * std::norm(psi[2])};
}
inline double particle_number(const Amplitudes& psi) {
  return std::norm(psi[0]) + 2.0 * std::norm(psi[1]) + 2.0 * std::norm(psi[2]);
}

struct Trajectory {
  std::vector<double> t;
  std::vector<Amplitudes> psi;
  std::vector<DrivePoint> drive;
  std::vector<double> loss_integral;  // integral of 4 gamma |psi_e|^2 dt
};

// Integrate from the pure atomic condensate (1,0,0) over [t0,t1], sampling
// every sample_dt.  tol sets both rtol and atol.
Trajectory integrate(const SystemParams& p, double t0, double t1, double tol,
                     double sample_dt);

// Final state only; cheaper inner loop for sweep cells.
Amplitudes integrate_final(const SystemParams& p, double t0, double t1, double tol,
                           double* loss_out = nullptr);

// 2|psi_g(T)|^2 / N(0); requires both envelopes < 1e-6 peak at the end.
double transfer_efficiency(const Trajectory& traj);
double transfer_efficiency(const SystemParams& p, double t0, double t1, double tol);

}  // namespace nlstirap
