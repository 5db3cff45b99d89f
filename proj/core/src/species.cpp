#include "nlstirap/species.hpp"

namespace nlstirap {

namespace {

constexpr double kHbar = 1.054571817e-34;       // J s
constexpr double kAmu = 1.66053906660e-27;      // kg
constexpr double kPi = 3.14159265358979323846;

// CODATA atomic masses
constexpr double kMassLi6 = 6.0151228874;
constexpr double kMassNa23 = 22.9897692820;
constexpr double kMassK40 = 39.96399817;
constexpr double kMassRb85 = 84.9117897379;
constexpr double kMassRb87 = 86.9091805310;
constexpr double kMassCs133 = 132.9054519610;

}  // namespace

double collision_shift(double a_bg_nm, double mass_amu,
                       double density_per_m3) {
  // 4 pi hbar a n / m in rad/s, then to rad/us
  const double rad_per_s = 4.0 * kPi * kHbar * (a_bg_nm * 1e-9) *
                           density_per_m3 / (mass_amu * kAmu);
  return rad_per_s * 1e-6;
}

const std::vector<SpeciesPreset>& species_presets() {
  static const std::vector<SpeciesPreset> presets = {
      {"6Li", "543.25(5)", 543.25, 3.122, 0.415, kMassLi6},
      {"6Li", "834.149", 834.149, -74.348, -9.880, kMassLi6},
      {"23Na", "853", 853.0, 3.381, 0.117, kMassNa23},
      {"23Na", "907", 907.0, 3.323, 0.115, kMassNa23},
      {"40K", "202.10(7)", 202.10, 9.208, 0.184, kMassK40},
      {"40K", "224.21(5)", 224.21, 9.208, 0.184, kMassK40},
      {"85Rb", "155.0", 155.0, -23.442, -0.220, kMassRb85},
      {"87Rb", "1007.40(4)", 1007.40, 5.318, 0.049, kMassRb87},
      {"133Cs", "19.90(3)", 19.90, 8.625, 0.052, kMassCs133},
      {"133Cs", "47.97(3)", 47.97, 47.890, 0.287, kMassCs133},
  };
  return presets;
}

}  // namespace nlstirap
