#include "nlstirap/meanfield.hpp"

#include <stdexcept>

#include "nlstirap/ode.hpp"

namespace nlstirap {

namespace {
constexpr std::complex<double> I{0.0, 1.0};

// state extended with the accumulated loss integral in slot 3 (real part)
using Ext = Eigen::Vector4cd;

Ext ext_rhs(double t, const Ext& y, const SystemParams& p) {
  const Amplitudes psi = y.head<3>();
  const Amplitudes d = meanfield_rhs(t, psi, p);
  Ext out;
  out.head<3>() = d;
  out[3] = 4.0 * p.gamma * std::norm(psi[1]);
  return out;
}

// The per-step controller in integrate_dopri5 keeps each local error near its
// tolerance, so drift over a 40 us window accumulates to ~1e2x the step
// tolerance (measured 1.5e-7 at 1e-9 for the rough region-I runs).  Map the
// requested accuracy to a 100x tighter step tolerance so `tol` bounds the
// error of the whole run; costs ~2x in step count (h ~ tol^(1/6)).
OdeOptions run_options(double tol) {
  OdeOptions opt;
  opt.rtol = opt.atol = 0.01 * tol;
  return opt;
}
}  // namespace

DrivePoint drive_at(const SystemParams& p, double t) {
  const double op = omega_p(p.pulses, t);
  const double os = omega_s(p.pulses, t);
  const double chi = op / os;
  const double shift = 8.0 * p.u_aa / (1.0 + cpt_s(chi));  // 4 U_aa phi_a^2

  double Delta;
  switch (p.detuning.single) {
    case DetuningPolicy::SinglePhoton::chirped:
      Delta = p.detuning.delta_u - shift;
      break;
    default:
      Delta = p.detuning.delta_const;
  }
  double delta;
  switch (p.detuning.two) {
    case DetuningPolicy::TwoPhoton::chirped_resonant:
      delta = -shift;
      break;
    default:
      delta = p.detuning.small_delta_const;
  }
  return {op, os, Delta, delta};
}

Amplitudes meanfield_rhs(double t, const Amplitudes& psi, const SystemParams& p) {
  const DrivePoint d = drive_at(p, t);
  const auto& a = psi[0];
  const auto& e = psi[1];
  const auto& g = psi[2];

  Amplitudes out;
  out[0] = I * (d.omega_p * std::conj(a) * e -
                2.0 * (p.u_aa * std::norm(a) + p.u_ag * std::norm(g)) * a);
  out[1] = I * ((std::complex<double>(d.Delta, p.gamma)) * e +
                0.5 * d.omega_p * a * a + 0.5 * d.omega_s * g);
  out[2] = I * (d.delta * g + 0.5 * d.omega_s * e -
                2.0 * (p.u_ag * std::norm(a) + p.u_gg * std::norm(g)) * g);
  return out;
}

Trajectory integrate(const SystemParams& p, double t0, double t1, double tol,
                     double sample_dt) {
  std::vector<double> samples;
  for (double t = t0; t < t1; t += sample_dt) samples.push_back(t);
  samples.push_back(t1);

  Trajectory out;
  const OdeOptions opt = run_options(tol);

  Ext y0 = Ext::Zero();
  y0[0] = 1.0;  // pure atomic condensate
  auto rhs = [&p](double t, const Ext& y) { return ext_rhs(t, y, p); };
  integrate_dopri5<Ext>(
      rhs, t0, y0, t1, samples,
      [&](double t, const Ext& y) {
        out.t.push_back(t);
        out.psi.push_back(y.head<3>());
        out.drive.push_back(drive_at(p, t));
        out.loss_integral.push_back(y[3].real());
      },
      opt);
  return out;
}

Amplitudes integrate_final(const SystemParams& p, double t0, double t1, double tol,
                           double* loss_out) {
  const OdeOptions opt = run_options(tol);
  Ext y0 = Ext::Zero();
  y0[0] = 1.0;
  auto rhs = [&p](double t, const Ext& y) { return ext_rhs(t, y, p); };
  const Ext yf = integrate_dopri5<Ext>(rhs, t0, y0, t1, opt);
  if (loss_out) *loss_out = yf[3].real();
  return yf.head<3>();
}

namespace {
void require_pulses_done(const PulseParams& pulses, double t_final) {
  if (omega_p(pulses, t_final) > 1e-6 * pulses.peak_p ||
      omega_s(pulses, t_final) > 1e-6 * pulses.peak_s)
    throw std::runtime_error("transfer_efficiency: pulses not finished at window end");
}
}  // namespace

double transfer_efficiency(const Trajectory& traj) {
  if (traj.t.empty()) throw std::runtime_error("transfer_efficiency: empty trajectory");
  double peak_p = 0.0, peak_s = 0.0;
  for (const auto& d : traj.drive) {
    peak_p = std::max(peak_p, d.omega_p);
    peak_s = std::max(peak_s, d.omega_s);
  }
  const auto& last = traj.drive.back();
  if (last.omega_p > 1e-6 * peak_p || last.omega_s > 1e-6 * peak_s)
    throw std::runtime_error("transfer_efficiency: pulses not finished at window end");
  const double n0 = particle_number(traj.psi.front());
  return 2.0 * std::norm(traj.psi.back()[2]) / n0;
}

double transfer_efficiency(const SystemParams& p, double t0, double t1, double tol) {
  require_pulses_done(p.pulses, t1);
  const Amplitudes psi = integrate_final(p, t0, t1, tol);
  return 2.0 * std::norm(psi[2]);  // N(0) = 1 for the fixed initial state
}

}  // namespace nlstirap
