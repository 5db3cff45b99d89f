#pragma once
// Adiabaticity diagnostics: quasi-static projection of the dark-state
// following error onto the excitation doublet, plus the closed-form
// estimate valid on two-photon resonance.

#include <complex>

#include <Eigen/Dense>

#include "nlstirap/pulses.hpp"

namespace nlstirap {

// Half-width (rad/us) of the detuning strip around the shifted single-photon
// resonance inside which the six-mode expansion is replaced by the resonant
// three-mode one.  On the resonance line the fluctuation matrix acquires a
// defective frequency pair and the mode norms blow up like |Delta_u|^{-1/4},
// so the six-mode projection is numerically meaningless there.
inline constexpr double kNearResonanceHalfWidth = 2.0;

enum class ProjectionRoute { full, reduced };

struct ProjectionResult {
  std::complex<double> c1{0.0, 0.0};  // doublet amplitudes
  std::complex<double> c2{0.0, 0.0};
  std::complex<double> c1_star{0.0, 0.0};  // conjugate slots of the solve;
  std::complex<double> c2_star{0.0, 0.0};  // equal conj(c1), conj(c2) up to
                                           // solver noise
  double r = 0.0;     // sqrt(|c1|^2 + |c2|^2) / 2
  double cond = 0.0;  // 2-norm condition number of the 4x4 system
  bool ill_conditioned = false;  // cond > 1e10
  ProjectionRoute route = ProjectionRoute::full;
};

// Quasi-static doublet amplitudes from the six-mode expansion.  Throws
// DegenerateSpectrum near an exceptional point of the spectrum and on the
// other measure-zero degeneracies inherited from the mode construction.
ProjectionResult projection_solve_full(double omega_p, double omega_s,
                                       double chi_dot, double u_aa,
                                       double delta_u, double gamma);

// Same amplitudes from the resonant three-mode basis; valid close to the
// shifted single-photon resonance and independent of delta_u by design.
ProjectionResult projection_solve_reduced(double omega_p, double omega_s,
                                          double chi_dot, double u_aa,
                                          double gamma);

// Evaluates the pulse pair at time t and dispatches on |delta_u|.
ProjectionResult projection_solve(const PulseParams& pulses, double t,
                                  double u_aa, double delta_u, double gamma);

// Closed-form r on two-photon resonance.  The collision-and-loss correction
// eta vanishes smoothly as chi -> 0 and exactly at gamma = 0 or u_aa = 0.
double analytic_r(double chi, double chi_dot, double omega_p, double omega_s,
                  double u_aa, double gamma);
double analytic_r(const PulseParams& pulses, double t, double u_aa,
                  double gamma);

// Zero mode and frequency doublet of the resonant collisionless three-mode
// problem.  All three vectors are exactly unit norm because
// Omega_s^2 + 4 Omega_p^2 phi_a^2 = Omega_s Omega_eff on the dark state.
// Sign convention: M' w_plus = -omega w_plus, M' w_minus = +omega w_minus.
struct ReducedModes {
  double omega = 0.0;      // sqrt(Omega_s Omega_eff) / 2
  Eigen::Vector3d w0;      // zero-frequency mode
  Eigen::Vector3d w_plus;  // branch with positive middle component
  Eigen::Vector3d w_minus;
};
ReducedModes reduced_modes_on_resonance(double omega_p, double omega_s);

}  // namespace nlstirap
