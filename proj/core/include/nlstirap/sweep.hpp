#pragma once
// Grid sweeps over (u_aa, delta_u): stability regions, adiabaticity r, and
// transfer efficiency with its per-column optimal detuning line, plus single
// trace runs.  Cells are independent; a static worker partition fills
// preallocated slots, so results do not depend on the worker count.

#include <string>
#include <vector>

#include "nlstirap/meanfield.hpp"
#include "nlstirap/pulses.hpp"

namespace nlstirap {

struct SweepGrid {
  double u_min = -10.0;
  double u_max = 10.0;
  int nu = 101;
  double du_min = -10.0;
  double du_max = 10.0;
  int ndu = 101;

  std::vector<double> u_axis() const;
  std::vector<double> du_axis() const;
  int cells() const { return nu * ndu; }
};

// Cell layout is row-major: index = iu * ndu + idu (u_aa outer, delta_u inner).

struct StabilityCell {
  double u_aa, delta_u;
  int region;     // 1, 2, 3
  double growth;  // largest |Im omega|; exactly 0 in region III
};

// flag values shared by the r and efficiency sweeps
inline constexpr int kCellOk = 0;
inline constexpr int kCellDegenerate = 1;  // value undefined (NaN), not zeroed
inline constexpr int kCellIllConditioned = 2;  // value kept, trust with care
inline constexpr int kCellIntegrationFailed = 1;

struct AdiabaticityCell {
  double u_aa, delta_u;
  double r;
  int region;
  int flag;
};

struct EfficiencyCell {
  double u_aa, delta_u;
  double efficiency;
  int flag;
};

struct OptimalPoint {
  double u_aa;
  double delta_u;     // parabolic refinement of the grid argmax
  double efficiency;  // re-integrated at the refined detuning
};

struct StabilitySweep {
  SweepGrid grid;
  double t_eval;
  std::vector<StabilityCell> cells;
};

struct AdiabaticitySweep {
  SweepGrid grid;
  double t_eval, gamma;
  std::vector<AdiabaticityCell> cells;
};

struct EfficiencySweep {
  SweepGrid grid;
  double gamma, tol, t0, t1;
  std::vector<EfficiencyCell> cells;
  std::vector<OptimalPoint> optimal_line;  // one entry per u_axis value
};

StabilitySweep sweep_stability(const SweepGrid& grid, const PulseParams& pulses,
                               double t_eval, int workers);

// r at t_eval per cell.  Cells hitting a degenerate spectrum are retried at
// t_eval +- 1e-3 us before being flagged.
AdiabaticitySweep sweep_adiabaticity(const SweepGrid& grid,
                                     const PulseParams& pulses, double gamma,
                                     double t_eval, int workers);

// Full mean-field run per cell (chirped single-photon detuning held at the
// cell's delta_u, two-photon chirped to resonance), then the per-column
// optimal line.
EfficiencySweep sweep_efficiency(const SweepGrid& grid,
                                 const PulseParams& pulses, double gamma,
                                 double tol, double t0, double t1, int workers);

// Single run: populations, drives, detunings, growth rate and r on a uniform
// time grid.  delta_u for the stability/adiabaticity columns is the
// instantaneous Delta(t) + 4 u_aa phi_a^2, which is constant for the chirped
// policy.
struct TraceRow {
  double t;
  double re_a, im_a, re_e, im_e, re_g, im_g;
  double p_a, p_e, p_g, n;
  double omega_p, omega_s, Delta, delta;
  double lambda;  // instability growth rate at the instantaneous drive
  double r;
  int r_flag;
};

struct TraceResult {
  std::vector<TraceRow> rows;
};

TraceResult trace_run(const SystemParams& params, double t0, double t1,
                      double sample_dt, double tol);

// CSV writers: header row, comma separated, %.17g, row-major; each also emits
// a gnuplot command file alongside (same stem, .gp extension).
void write_stability_csv(const std::string& path, const StabilitySweep& sw);
void write_adiabaticity_csv(const std::string& path,
                            const AdiabaticitySweep& sw);
void write_efficiency_csv(const std::string& path, const EfficiencySweep& sw);
void write_optimal_line_csv(const std::string& path, const EfficiencySweep& sw);
void write_trace_csv(const std::string& path, const TraceResult& trace);

// requested > 0 wins; else NLSTIRAP_WORKERS; else hardware concurrency.
int resolve_workers(int requested);

}  // namespace nlstirap
