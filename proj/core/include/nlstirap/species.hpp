#pragma once
// Background-scattering presets near common Feshbach resonances and the
// collision shift they imply at the reference density n0 = 1e21 m^-3.

#include <string>
#include <vector>

namespace nlstirap {

inline constexpr double kPresetDensity = 1e21;  // m^-3

struct SpeciesPreset {
  std::string species;    // isotope label, e.g. "6Li"
  std::string resonance;  // field label with quoted uncertainty, e.g. "543.25(5)"
  double b0_gauss;        // resonance position
  double a_bg_nm;         // background scattering length
  double u_aa;            // 4 pi hbar a_bg n0 / m in rad/us
  double mass_amu;
};

// The ten tabulated resonances.  All |u_aa| stay under 10 rad/us except the
// broad 6Li resonance at 834 G.
const std::vector<SpeciesPreset>& species_presets();

// Mean-field shift 4 pi hbar a n / m expressed in rad/us.
double collision_shift(double a_bg_nm, double mass_amu, double density_per_m3);

}  // namespace nlstirap
