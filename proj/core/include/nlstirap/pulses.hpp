#pragma once
// Gaussian pump/control drive for the atom-molecule Lambda system.
// Units: rad/us for every rate, us for time.  A "10 MHz" Rabi peak means
// 1e7 s^-1 = 10 rad/us; no stray 2*pi anywhere in the toolkit.

#include <cmath>
#include <stdexcept>

namespace nlstirap {

struct PulseParams {
  double peak_p = 10.0;  // pump Omega0_p
  double peak_s = 10.0;  // control (Stokes) Omega0_s
  double t_p = 19.0;     // pump center; control comes first (STIRAP ordering)
  double t_s = 11.0;
  double tau_p = 4.0;    // widths; equal in every standard run
  double tau_s = 4.0;

  // midpoint of the two centers, where the envelopes cross for equal peaks
  double t_overlap() const { return 0.5 * (t_p + t_s); }
};

inline double gaussian_envelope(double t, double center, double peak, double tau) {
  const double x = (t - center) / tau;
  return peak * std::exp(-x * x);
}

inline double omega_p(const PulseParams& p, double t) {
  return gaussian_envelope(t, p.t_p, p.peak_p, p.tau_p);
}
inline double omega_s(const PulseParams& p, double t) {
  return gaussian_envelope(t, p.t_s, p.peak_s, p.tau_s);
}

// d/dt of the envelope, analytic: -2 (t-tc)/tau^2 * Omega(t)
inline double omega_p_rate(const PulseParams& p, double t) {
  return -2.0 * (t - p.t_p) / (p.tau_p * p.tau_p) * omega_p(p, t);
}
inline double omega_s_rate(const PulseParams& p, double t) {
  return -2.0 * (t - p.t_s) / (p.tau_s * p.tau_s) * omega_s(p, t);
}

struct Mixing {
  double chi;      // Omega_p / Omega_s, sweeps 0 -> inf through the transfer
  double chi_dot;  // quotient rule on the analytic envelope rates
};

inline Mixing mixing_ratio(const PulseParams& p, double t) {
  const double os = omega_s(p, t);
  if (os <= 0.0)
    throw std::domain_error("mixing_ratio: control envelope vanished");
  const double op = omega_p(p, t);
  const double chi = op / os;
  const double chi_dot = (omega_p_rate(p, t) * os - op * omega_s_rate(p, t)) / (os * os);
  return {chi, chi_dot};
}

// Detuning programming.  The chirped single-photon mode holds the
// collision-shifted detuning Delta_u = Delta + 4 U_aa phi_a^2 fixed by
// sliding Delta(t); chirped_resonant two-photon locks delta_eff = 0.
struct DetuningPolicy {
  enum class SinglePhoton { chirped, constant };
  enum class TwoPhoton { chirped_resonant, constant };

  SinglePhoton single = SinglePhoton::chirped;
  double delta_u = 0.0;       // chirp target (rad/us)
  double delta_const = 0.0;   // plain constant Delta (rad/us)

  TwoPhoton two = TwoPhoton::chirped_resonant;
  double small_delta_const = 0.0;  // constant two-photon delta (rad/us)
};

}  // namespace nlstirap
