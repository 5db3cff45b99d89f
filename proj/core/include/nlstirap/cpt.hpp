#pragma once
// Collision-dressed CPT (dark) state of the atom-molecule Lambda system and
// its analytic drift.  With the two-photon detuning locked to
// delta = -4 U_aa phi_a^2 the dark state keeps phi_e = 0 and its amplitudes
// depend only on chi = Omega_p/Omega_s:
//   phi_a = sqrt(2/(s+1)),  phi_g = -2 chi/(1+s),  s = sqrt(1+8 chi^2)

#include <cmath>

namespace nlstirap {

inline double cpt_s(double chi) { return std::sqrt(1.0 + 8.0 * chi * chi); }

struct CptState {
  double phi_a;           // atomic amplitude, positive gauge
  double phi_g;           // molecular amplitude, carries the sign (-chi)
  double mu;              // chemical potential 2 U_aa phi_a^2
  double delta_resonant;  // two-photon detuning enforcing delta_eff = 0
};

inline CptState cpt_state(double chi, double u_aa = 0.0) {
  const double s = cpt_s(chi);
  const double phi_a = std::sqrt(2.0 / (s + 1.0));
  const double phi_g = -2.0 * chi / (1.0 + s);
  const double mu = 2.0 * u_aa * phi_a * phi_a;
  return {phi_a, phi_g, mu, -2.0 * mu};
}

struct CptRate {
  double phi_a_dot;
  double phi_g_dot;
};

// chain rule through chi(t); analytic so the projection sources stay smooth
//   d phi_a/d chi = -4 chi phi_a / (s(s+1)),  d phi_g/d chi = -2/(s(1+s))
inline CptRate cpt_rate(double chi, double chi_dot) {
  const double s = cpt_s(chi);
  const double phi_a = std::sqrt(2.0 / (s + 1.0));
  const double da = -4.0 * chi * phi_a / (s * (s + 1.0));
  const double dg = -2.0 / (s * (1.0 + s));
  return {da * chi_dot, dg * chi_dot};
}

}  // namespace nlstirap
