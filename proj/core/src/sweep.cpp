#include "nlstirap/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <stdexcept>
#include <thread>

#include "nlstirap/adiabatic.hpp"
#include "nlstirap/cpt.hpp"
#include "nlstirap/modes.hpp"
#include "nlstirap/ode.hpp"
#include "nlstirap/stability.hpp"

namespace nlstirap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<size_t>(std::max(n, 0)));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return out;
}

// Static partition: worker k owns [k n / W, (k+1) n / W).  Every cell writes
// only its own slot, so the result is independent of W.
template <class Fn>
void run_cells(int n, int workers, const Fn& fn) {
  workers = std::max(1, std::min(workers, n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int k = 0; k < workers; ++k) {
    const int lo = static_cast<int>(static_cast<long long>(k) * n / workers);
    const int hi =
        static_cast<int>(static_cast<long long>(k + 1) * n / workers);
    pool.emplace_back([lo, hi, &fn]() {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Effective single-photon detuning actually realized at time t; constant and
// equal to the programmed delta_u under the chirped policy.
double delta_u_at(const SystemParams& p, double t) {
  const DrivePoint d = drive_at(p, t);
  const Mixing mx = mixing_ratio(p.pulses, t);
  return d.Delta + 8.0 * p.u_aa / (1.0 + cpt_s(mx.chi));
}

SystemParams cell_params(const PulseParams& pulses, double gamma, double u_aa,
                         double delta_u) {
  SystemParams p;
  p.u_aa = u_aa;
  p.gamma = gamma;
  p.pulses = pulses;
  p.detuning.single = DetuningPolicy::SinglePhoton::chirped;
  p.detuning.delta_u = delta_u;
  p.detuning.two = DetuningPolicy::TwoPhoton::chirped_resonant;
  return p;
}

FILE* open_or_throw(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  return f;
}

std::string sibling_gp(const std::string& csv) {
  std::filesystem::path p(csv);
  p.replace_extension(".gp");
  return p.string();
}

std::string basename_of(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

void write_heatmap_gp(const std::string& csv, const char* label, int column) {
  FILE* f = open_or_throw(sibling_gp(csv));
  std::fprintf(f,
               "set datafile separator comma\n"
               "set key off\n"
               "set xlabel 'u_aa (rad/us)'\n"
               "set ylabel 'delta_u (rad/us)'\n"
               "set title '%s'\n"
               "plot '%s' skip 1 using 1:2:%d with image\n",
               label, basename_of(csv).c_str(), column);
  std::fclose(f);
}

}  // namespace

std::vector<double> SweepGrid::u_axis() const {
  return linspace(u_min, u_max, nu);
}
std::vector<double> SweepGrid::du_axis() const {
  return linspace(du_min, du_max, ndu);
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("NLSTIRAP_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

StabilitySweep sweep_stability(const SweepGrid& grid, const PulseParams& pulses,
                               double t_eval, int workers) {
  StabilitySweep sw;
  sw.grid = grid;
  sw.t_eval = t_eval;
  sw.cells.resize(static_cast<size_t>(grid.cells()));
  const auto us = grid.u_axis();
  const auto dus = grid.du_axis();
  const double op = omega_p(pulses, t_eval);
  const double os = omega_s(pulses, t_eval);

  run_cells(grid.cells(), resolve_workers(workers), [&](int i) {
    const double u = us[static_cast<size_t>(i / grid.ndu)];
    const double du = dus[static_cast<size_t>(i % grid.ndu)];
    const StabilityVerdict v = classify(op, os, u, du);
    sw.cells[static_cast<size_t>(i)] = {u, du, static_cast<int>(v.region),
                                        v.growth};
  });
  return sw;
}

AdiabaticitySweep sweep_adiabaticity(const SweepGrid& grid,
                                     const PulseParams& pulses, double gamma,
                                     double t_eval, int workers) {
  AdiabaticitySweep sw;
  sw.grid = grid;
  sw.t_eval = t_eval;
  sw.gamma = gamma;
  sw.cells.resize(static_cast<size_t>(grid.cells()));
  const auto us = grid.u_axis();
  const auto dus = grid.du_axis();
  const double op = omega_p(pulses, t_eval);
  const double os = omega_s(pulses, t_eval);

  run_cells(grid.cells(), resolve_workers(workers), [&](int i) {
    const double u = us[static_cast<size_t>(i / grid.ndu)];
    const double du = dus[static_cast<size_t>(i % grid.ndu)];
    AdiabaticityCell cell{u, du, kNaN, 0, kCellOk};
    const Spectrum sp = excitation_frequencies(op, os, u, du);
    cell.region = static_cast<int>(classify_from_invariants(sp.a1, sp.a2));
    // degenerate spectra are measure zero in (u, du); nudging the evaluation
    // time moves chi and steps off the locus
    for (const double t : {t_eval, t_eval + 1e-3, t_eval - 1e-3}) {
      try {
        const ProjectionResult pr = projection_solve(pulses, t, u, du, gamma);
        cell.r = pr.r;
        cell.flag = pr.ill_conditioned ? kCellIllConditioned : kCellOk;
        break;
      } catch (const DegenerateSpectrum&) {
        cell.flag = kCellDegenerate;
        cell.r = kNaN;
      }
    }
    sw.cells[static_cast<size_t>(i)] = cell;
  });
  return sw;
}

namespace {

double cell_efficiency(const PulseParams& pulses, double gamma, double tol,
                       double t0, double t1, double u, double du, int* flag) {
  try {
    const double eff =
        transfer_efficiency(cell_params(pulses, gamma, u, du), t0, t1, tol);
    *flag = kCellOk;
    return eff;
  } catch (const std::exception&) {
    *flag = kCellIntegrationFailed;
    return kNaN;
  }
}

}  // namespace

EfficiencySweep sweep_efficiency(const SweepGrid& grid,
                                 const PulseParams& pulses, double gamma,
                                 double tol, double t0, double t1,
                                 int workers) {
  EfficiencySweep sw;
  sw.grid = grid;
  sw.gamma = gamma;
  sw.tol = tol;
  sw.t0 = t0;
  sw.t1 = t1;
  sw.cells.resize(static_cast<size_t>(grid.cells()));
  const auto us = grid.u_axis();
  const auto dus = grid.du_axis();

  run_cells(grid.cells(), resolve_workers(workers), [&](int i) {
    const double u = us[static_cast<size_t>(i / grid.ndu)];
    const double du = dus[static_cast<size_t>(i % grid.ndu)];
    EfficiencyCell cell{u, du, kNaN, kCellOk};
    cell.efficiency =
        cell_efficiency(pulses, gamma, tol, t0, t1, u, du, &cell.flag);
    sw.cells[static_cast<size_t>(i)] = cell;
  });

  // Optimal detuning per u_aa column: parabola through the grid argmax and
  // its neighbors, then one honest re-integration at the refined detuning.
  sw.optimal_line.reserve(us.size());
  for (int iu = 0; iu < grid.nu; ++iu) {
    const double u = us[static_cast<size_t>(iu)];
    int best = -1;
    double besty = -std::numeric_limits<double>::infinity();
    for (int idu = 0; idu < grid.ndu; ++idu) {
      const auto& c = sw.cells[static_cast<size_t>(iu * grid.ndu + idu)];
      if (c.flag == kCellOk && c.efficiency > besty) {
        besty = c.efficiency;
        best = idu;
      }
    }
    if (best < 0) {
      sw.optimal_line.push_back({u, kNaN, kNaN});
      continue;
    }
    OptimalPoint opt{u, dus[static_cast<size_t>(best)], besty};
    if (best > 0 && best + 1 < grid.ndu) {
      const auto& cm = sw.cells[static_cast<size_t>(iu * grid.ndu + best - 1)];
      const auto& cp = sw.cells[static_cast<size_t>(iu * grid.ndu + best + 1)];
      if (cm.flag == kCellOk && cp.flag == kCellOk) {
        const double y0 = cm.efficiency, y1 = besty, y2 = cp.efficiency;
        const double curv = y0 - 2.0 * y1 + y2;
        if (curv < 0.0) {
          const double dx = dus[static_cast<size_t>(best + 1)] -
                            dus[static_cast<size_t>(best)];
          double xs = opt.delta_u + 0.5 * dx * (y0 - y2) / curv;
          xs = std::clamp(xs, dus[static_cast<size_t>(best - 1)],
                          dus[static_cast<size_t>(best + 1)]);
          int flag = kCellOk;
          const double eff =
              cell_efficiency(pulses, gamma, tol, t0, t1, u, xs, &flag);
          // keep the refined point only when it actually beats the grid argmax
          if (flag == kCellOk && eff >= besty) {
            opt.delta_u = xs;
            opt.efficiency = eff;
          }
        }
      }
    }
    sw.optimal_line.push_back(opt);
  }
  return sw;
}

TraceResult trace_run(const SystemParams& params, double t0, double t1,
                      double sample_dt, double tol) {
  const Trajectory traj = integrate(params, t0, t1, tol, sample_dt);
  TraceResult out;
  out.rows.reserve(traj.t.size());
  for (size_t k = 0; k < traj.t.size(); ++k) {
    const double t = traj.t[k];
    const Amplitudes& psi = traj.psi[k];
    const DrivePoint& d = traj.drive[k];
    TraceRow row{};
    row.t = t;
    row.re_a = psi[0].real();
    row.im_a = psi[0].imag();
    row.re_e = psi[1].real();
    row.im_e = psi[1].imag();
    row.re_g = psi[2].real();
    row.im_g = psi[2].imag();
    const Populations pop = populations(psi);
    row.p_a = pop.p_a;
    row.p_e = pop.p_e;
    row.p_g = pop.p_g;
    row.n = particle_number(psi);
    row.omega_p = d.omega_p;
    row.omega_s = d.omega_s;
    row.Delta = d.Delta;
    row.delta = d.delta;
    const double du = delta_u_at(params, t);
    row.lambda = classify(d.omega_p, d.omega_s, params.u_aa, du).growth;
    try {
      const ProjectionResult pr =
          projection_solve(params.pulses, t, params.u_aa, du, params.gamma);
      row.r = pr.r;
      row.r_flag = pr.ill_conditioned ? kCellIllConditioned : kCellOk;
    } catch (const DegenerateSpectrum&) {
      row.r = kNaN;
      row.r_flag = kCellDegenerate;
    }
    out.rows.push_back(row);
  }
  return out;
}

void write_stability_csv(const std::string& path, const StabilitySweep& sw) {
  FILE* f = open_or_throw(path);
  std::fprintf(f, "u_aa,delta_u,region,lambda\n");
  for (const auto& c : sw.cells)
    std::fprintf(f, "%.17g,%.17g,%d,%.17g\n", c.u_aa, c.delta_u, c.region,
                 c.growth);
  std::fclose(f);
  write_heatmap_gp(path, "stability region", 3);
}

void write_adiabaticity_csv(const std::string& path,
                            const AdiabaticitySweep& sw) {
  FILE* f = open_or_throw(path);
  std::fprintf(f, "u_aa,delta_u,r,region,flag\n");
  for (const auto& c : sw.cells)
    std::fprintf(f, "%.17g,%.17g,%.17g,%d,%d\n", c.u_aa, c.delta_u, c.r,
                 c.region, c.flag);
  std::fclose(f);
  write_heatmap_gp(path, "adiabaticity parameter r", 3);
}

void write_efficiency_csv(const std::string& path, const EfficiencySweep& sw) {
  FILE* f = open_or_throw(path);
  std::fprintf(f, "u_aa,delta_u,efficiency,flag\n");
  for (const auto& c : sw.cells)
    std::fprintf(f, "%.17g,%.17g,%.17g,%d\n", c.u_aa, c.delta_u, c.efficiency,
                 c.flag);
  std::fclose(f);
  write_heatmap_gp(path, "transfer efficiency", 3);
}

void write_optimal_line_csv(const std::string& path,
                            const EfficiencySweep& sw) {
  FILE* f = open_or_throw(path);
  std::fprintf(f, "u_aa,delta_u_opt,efficiency_opt\n");
  for (const auto& p : sw.optimal_line)
    std::fprintf(f, "%.17g,%.17g,%.17g\n", p.u_aa, p.delta_u, p.efficiency);
  std::fclose(f);

  FILE* g = open_or_throw(sibling_gp(path));
  std::fprintf(g,
               "set datafile separator comma\n"
               "set xlabel 'u_aa (rad/us)'\n"
               "set ylabel 'delta_u (rad/us)'\n"
               "set title 'optimal detuning line'\n"
               "plot '%s' skip 1 using 1:2 with linespoints title 'delta_u*'\n",
               basename_of(path).c_str());
  std::fclose(g);
}

void write_trace_csv(const std::string& path, const TraceResult& trace) {
  FILE* f = open_or_throw(path);
  std::fprintf(f,
               "t,re_psi_a,im_psi_a,re_psi_e,im_psi_e,re_psi_g,im_psi_g,"
               "p_a,p_e,p_g,n,omega_p,omega_s,Delta,delta,lambda,r,r_flag\n");
  for (const auto& r : trace.rows)
    std::fprintf(f,
                 "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                 "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n",
                 r.t, r.re_a, r.im_a, r.re_e, r.im_e, r.re_g, r.im_g, r.p_a,
                 r.p_e, r.p_g, r.n, r.omega_p, r.omega_s, r.Delta, r.delta,
                 r.lambda, r.r, r.r_flag);
  std::fclose(f);

  FILE* g = open_or_throw(sibling_gp(path));
  std::fprintf(g,
               "set datafile separator comma\n"
               "set xlabel 't (us)'\n"
               "set ylabel 'population'\n"
               "plot '%s' skip 1 using 1:8 with lines title 'P_a', \\\n"
               "     '' skip 1 using 1:9 with lines title 'P_e', \\\n"
               "     '' skip 1 using 1:10 with lines title 'P_g'\n",
               basename_of(path).c_str());
  std::fclose(g);
}

}  // namespace nlstirap
