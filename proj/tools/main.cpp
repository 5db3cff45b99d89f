// Command-line front end: sweep maps, single trace runs, species presets.
// One JSON config file drives a run; a handful of flags override it.

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nlstirap/species.hpp"
#include "nlstirap/sweep.hpp"
#include "nlstirap/version.hpp"

using nlohmann::json;
using namespace nlstirap;

namespace {

struct RunConfig {
  PulseParams pulses;
  DetuningPolicy detuning;
  double u_aa = 0.0, u_ag = 0.0, u_gg = 0.0;
  double gamma = 1.0;
  SweepGrid grid;
  bool grid_set = false;  // grid came from config or CLI
  double ode_tol = 1e-9;
  double t0 = 0.0, t1 = 40.0, sample_dt = 0.05;
  std::optional<double> t_eval;
  std::string out_dir = "out";

  double eval_time() const {
    return t_eval ? *t_eval : pulses.t_overlap();
  }
};

// CLI override slots; NaN / empty means "not given".
struct CliOverrides {
  std::string config;
  double u_aa = std::numeric_limits<double>::quiet_NaN();
  double delta_u = std::numeric_limits<double>::quiet_NaN();
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double delta_const = std::numeric_limits<double>::quiet_NaN();
  double t_eval = std::numeric_limits<double>::quiet_NaN();
  std::string grid;
  std::string single_photon;
  std::string out;
  int workers = 0;
};

void add_common_options(CLI::App* sub, CliOverrides& o) {
  sub->add_option("--config", o.config, "JSON config file");
  sub->add_option("--uaa", o.u_aa, "atom-atom collision strength (rad/us)");
  sub->add_option("--delta-u", o.delta_u,
                  "effective single-photon detuning target (rad/us)");
  sub->add_option("--grid", o.grid, "grid resolution as NxM (u_aa x delta_u)");
  sub->add_option("--gamma", o.gamma, "excited-state loss rate (rad/us)");
  sub->add_option("--out", o.out, "output directory");
  sub->add_option("--workers", o.workers,
                  "worker threads (default: NLSTIRAP_WORKERS or hardware)");
  sub->add_option("--t-eval", o.t_eval,
                  "evaluation time for map cells (default: pulse overlap)");
  sub->add_option("--single-photon", o.single_photon,
                  "single-photon policy: chirped | constant")
      ->check(CLI::IsMember({"chirped", "constant"}));
  sub->add_option("--delta-const", o.delta_const,
                  "constant single-photon detuning (rad/us)");
}

DetuningPolicy::SinglePhoton parse_single(const std::string& s) {
  if (s == "chirped") return DetuningPolicy::SinglePhoton::chirped;
  if (s == "constant") return DetuningPolicy::SinglePhoton::constant;
  throw std::runtime_error("unknown single-photon policy: " + s);
}

DetuningPolicy::TwoPhoton parse_two(const std::string& s) {
  if (s == "chirped_resonant") return DetuningPolicy::TwoPhoton::chirped_resonant;
  if (s == "constant") return DetuningPolicy::TwoPhoton::constant;
  throw std::runtime_error("unknown two-photon policy: " + s);
}

const char* single_name(DetuningPolicy::SinglePhoton s) {
  return s == DetuningPolicy::SinglePhoton::chirped ? "chirped" : "constant";
}
const char* two_name(DetuningPolicy::TwoPhoton t) {
  return t == DetuningPolicy::TwoPhoton::chirped_resonant ? "chirped_resonant"
                                                          : "constant";
}

void apply_config_file(RunConfig& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  json j = json::parse(in);

  if (j.contains("pulses")) {
    const auto& p = j.at("pulses");
    c.pulses.peak_p = p.value("peak_p", c.pulses.peak_p);
    c.pulses.peak_s = p.value("peak_s", c.pulses.peak_s);
    c.pulses.t_p = p.value("t_p", c.pulses.t_p);
    c.pulses.t_s = p.value("t_s", c.pulses.t_s);
    c.pulses.tau_p = p.value("tau_p", c.pulses.tau_p);
    c.pulses.tau_s = p.value("tau_s", c.pulses.tau_s);
  }
  if (j.contains("detuning")) {
    const auto& d = j.at("detuning");
    if (d.contains("single"))
      c.detuning.single = parse_single(d.at("single").get<std::string>());
    c.detuning.delta_u = d.value("delta_u", c.detuning.delta_u);
    c.detuning.delta_const = d.value("delta_const", c.detuning.delta_const);
    if (d.contains("two"))
      c.detuning.two = parse_two(d.at("two").get<std::string>());
    c.detuning.small_delta_const =
        d.value("small_delta_const", c.detuning.small_delta_const);
  }
  if (j.contains("collisions")) {
    const auto& u = j.at("collisions");
    c.u_aa = u.value("u_aa", c.u_aa);
    c.u_ag = u.value("u_ag", c.u_ag);
    c.u_gg = u.value("u_gg", c.u_gg);
  }
  c.gamma = j.value("gamma", c.gamma);
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    c.grid.u_min = g.value("u_min", c.grid.u_min);
    c.grid.u_max = g.value("u_max", c.grid.u_max);
    c.grid.nu = g.value("nu", c.grid.nu);
    c.grid.du_min = g.value("du_min", c.grid.du_min);
    c.grid.du_max = g.value("du_max", c.grid.du_max);
    c.grid.ndu = g.value("ndu", c.grid.ndu);
    c.grid_set = true;
  }
  if (j.contains("tolerances"))
    c.ode_tol = j.at("tolerances").value("ode_tol", c.ode_tol);
  if (j.contains("window")) {
    const auto& w = j.at("window");
    c.t0 = w.value("t0", c.t0);
    c.t1 = w.value("t1", c.t1);
    c.sample_dt = w.value("sample_dt", c.sample_dt);
  }
  if (j.contains("t_eval")) c.t_eval = j.at("t_eval").get<double>();
  c.out_dir = j.value("out_dir", c.out_dir);
}

RunConfig resolve(const CliOverrides& o, int default_nu, int default_ndu) {
  RunConfig c;
  if (!o.config.empty()) apply_config_file(c, o.config);
  if (!std::isnan(o.u_aa)) c.u_aa = o.u_aa;
  if (!std::isnan(o.delta_u)) c.detuning.delta_u = o.delta_u;
  if (!std::isnan(o.gamma)) c.gamma = o.gamma;
  if (!std::isnan(o.delta_const)) {
    c.detuning.delta_const = o.delta_const;
    if (o.single_photon.empty())
      c.detuning.single = DetuningPolicy::SinglePhoton::constant;
  }
  if (!o.single_photon.empty()) c.detuning.single = parse_single(o.single_photon);
  if (!std::isnan(o.t_eval)) c.t_eval = o.t_eval;
  if (!o.grid.empty()) {
    int n = 0, m = 0;
    if (std::sscanf(o.grid.c_str(), "%dx%d", &n, &m) != 2 || n < 1 || m < 1)
      throw std::runtime_error("bad --grid value, expected NxM: " + o.grid);
    c.grid.nu = n;
    c.grid.ndu = m;
    c.grid_set = true;
  }
  if (!c.grid_set) {
    c.grid.nu = default_nu;
    c.grid.ndu = default_ndu;
  }
  if (!o.out.empty()) c.out_dir = o.out;
  return c;
}

json config_json(const RunConfig& c) {
  return json{
      {"pulses",
       {{"peak_p", c.pulses.peak_p},
        {"peak_s", c.pulses.peak_s},
        {"t_p", c.pulses.t_p},
        {"t_s", c.pulses.t_s},
        {"tau_p", c.pulses.tau_p},
        {"tau_s", c.pulses.tau_s}}},
      {"detuning",
       {{"single", single_name(c.detuning.single)},
        {"delta_u", c.detuning.delta_u},
        {"delta_const", c.detuning.delta_const},
        {"two", two_name(c.detuning.two)},
        {"small_delta_const", c.detuning.small_delta_const}}},
      {"collisions", {{"u_aa", c.u_aa}, {"u_ag", c.u_ag}, {"u_gg", c.u_gg}}},
      {"gamma", c.gamma},
      {"grid",
       {{"u_min", c.grid.u_min},
        {"u_max", c.grid.u_max},
        {"nu", c.grid.nu},
        {"du_min", c.grid.du_min},
        {"du_max", c.grid.du_max},
        {"ndu", c.grid.ndu}}},
      {"tolerances", {{"ode_tol", c.ode_tol}}},
      {"window", {{"t0", c.t0}, {"t1", c.t1}, {"sample_dt", c.sample_dt}}},
      {"t_eval", c.eval_time()},
      {"out_dir", c.out_dir}};
}

void write_manifest(const std::string& path, const char* tool,
                    const RunConfig& c, int workers, double wall_s,
                    long failed_cells, const std::vector<std::string>& files) {
  json j{{"schema_version", 1},
         {"tool", tool},
         {"code_version", kVersion},
         {"config", config_json(c)},
         {"workers", workers},
         {"wall_clock_s", wall_s},
         {"failed_cells", failed_cells},
         {"outputs", files}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open manifest: " + path);
  out << j.dump(2) << "\n";
}

std::filesystem::path prepare_out_dir(const RunConfig& c) {
  std::filesystem::path dir(c.out_dir);
  std::filesystem::create_directories(dir);
  return dir;
}

SystemParams system_params(const RunConfig& c) {
  SystemParams p;
  p.u_aa = c.u_aa;
  p.gamma = c.gamma;
  p.u_ag = c.u_ag;
  p.u_gg = c.u_gg;
  p.pulses = c.pulses;
  p.detuning = c.detuning;
  return p;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int run_stability(const CliOverrides& o) {
  const RunConfig c = resolve(o, 101, 101);
  const int workers = resolve_workers(o.workers);
  const auto dir = prepare_out_dir(c);
  const auto start = Clock::now();
  const StabilitySweep sw =
      sweep_stability(c.grid, c.pulses, c.eval_time(), workers);
  const std::string csv = (dir / "stability.csv").string();
  write_stability_csv(csv, sw);
  write_manifest((dir / "stability_manifest.json").string(), "stability-map",
                 c, workers, seconds_since(start), 0,
                 {"stability.csv", "stability.gp"});
  std::printf("stability-map: %d cells -> %s (%d workers)\n", c.grid.cells(),
              csv.c_str(), workers);
  return 0;
}

int run_r_map(const CliOverrides& o) {
  const RunConfig c = resolve(o, 101, 101);
  const int workers = resolve_workers(o.workers);
  const auto dir = prepare_out_dir(c);
  const auto start = Clock::now();
  const AdiabaticitySweep sw =
      sweep_adiabaticity(c.grid, c.pulses, c.gamma, c.eval_time(), workers);
  long failed = 0;
  for (const auto& cell : sw.cells)
    if (cell.flag == kCellDegenerate) ++failed;
  const std::string csv = (dir / "r.csv").string();
  write_adiabaticity_csv(csv, sw);
  write_manifest((dir / "r_manifest.json").string(), "r-map", c, workers,
                 seconds_since(start), failed, {"r.csv", "r.gp"});
  std::printf("r-map: %d cells, %ld undefined -> %s (%d workers)\n",
              c.grid.cells(), failed, csv.c_str(), workers);
  return 0;
}

int run_efficiency(const CliOverrides& o) {
  const RunConfig c = resolve(o, 61, 61);
  const int workers = resolve_workers(o.workers);
  const auto dir = prepare_out_dir(c);
  const auto start = Clock::now();
  const EfficiencySweep sw = sweep_efficiency(c.grid, c.pulses, c.gamma,
                                              c.ode_tol, c.t0, c.t1, workers);
  long failed = 0;
  for (const auto& cell : sw.cells)
    if (cell.flag != kCellOk) ++failed;
  const std::string csv = (dir / "efficiency.csv").string();
  write_efficiency_csv(csv, sw);
  write_optimal_line_csv((dir / "optimal_line.csv").string(), sw);
  write_manifest(
      (dir / "efficiency_manifest.json").string(), "efficiency-map", c,
      workers, seconds_since(start), failed,
      {"efficiency.csv", "efficiency.gp", "optimal_line.csv",
       "optimal_line.gp"});
  std::printf("efficiency-map: %d cells, %ld failed -> %s (%d workers)\n",
              c.grid.cells(), failed, csv.c_str(), workers);
  return 0;
}

int run_trace(const CliOverrides& o) {
  const RunConfig c = resolve(o, 101, 101);
  const auto dir = prepare_out_dir(c);
  const auto start = Clock::now();
  const TraceResult tr =
      trace_run(system_params(c), c.t0, c.t1, c.sample_dt, c.ode_tol);
  const std::string csv = (dir / "trace.csv").string();
  write_trace_csv(csv, tr);
  write_manifest((dir / "trace_manifest.json").string(), "trace", c, 1,
                 seconds_since(start), 0, {"trace.csv", "trace.gp"});
  const auto& last = tr.rows.back();
  std::printf("trace: %zu samples -> %s (final P_g = %.4f, N = %.6f)\n",
              tr.rows.size(), csv.c_str(), last.p_g, last.n);
  return 0;
}

int run_presets(const CliOverrides& o) {
  std::printf("%-8s %-12s %10s %10s %10s %14s\n", "species", "resonance",
              "B0 (G)", "a_bg (nm)", "u_aa", "mass (amu)");
  for (const auto& s : species_presets())
    std::printf("%-8s %-12s %10.3f %10.3f %10.3f %14.6f\n", s.species.c_str(),
                s.resonance.c_str(), s.b0_gauss, s.a_bg_nm, s.u_aa,
                s.mass_amu);
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    const std::string path =
        (std::filesystem::path(o.out) / "presets.csv").string();
    FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    std::fprintf(f, "species,resonance,b0_gauss,a_bg_nm,u_aa,mass_amu\n");
    for (const auto& s : species_presets())
      std::fprintf(f, "%s,%s,%.17g,%.17g,%.17g,%.17g\n", s.species.c_str(),
                   s.resonance.c_str(), s.b0_gauss, s.a_bg_nm, s.u_aa,
                   s.mass_amu);
    std::fclose(f);
    std::printf("wrote %s\n", path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonlinear STIRAP photoassociation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CliOverrides o_stab, o_r, o_eff, o_trace, o_presets;
  auto* stab = app.add_subcommand("stability-map",
                                  "region map over (u_aa, delta_u)");
  add_common_options(stab, o_stab);
  auto* rmap = app.add_subcommand("r-map",
                                  "adiabaticity parameter map at t_eval");
  add_common_options(rmap, o_r);
  auto* eff = app.add_subcommand("efficiency-map",
                                 "transfer-efficiency map + optimal line");
  add_common_options(eff, o_eff);
  auto* trace =
      app.add_subcommand("trace", "single run: populations, lambda, r vs t");
  add_common_options(trace, o_trace);
  auto* presets = app.add_subcommand("presets", "species preset table");
  presets->add_option("--out", o_presets.out, "also write presets.csv here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (stab->parsed()) return run_stability(o_stab);
    if (rmap->parsed()) return run_r_map(o_r);
    if (eff->parsed()) return run_efficiency(o_eff);
    if (trace->parsed()) return run_trace(o_trace);
    if (presets->parsed()) return run_presets(o_presets);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
