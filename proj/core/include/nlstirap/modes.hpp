#pragma once
// Eigenvectors of the 6x6 fluctuation matrix: the +omega1/+omega2 quasi-
// particle pair under the complex-square normalization
// sum_j (u_j^2 - v_j^2) = 1 (a bilinear form, no conjugation -- modes with a
// negative bilinear norm come out imaginary), plus the Goldstone zero mode P
// and its Jordan partner Q with M Q = P/nu and Q^dag eta+ P = 1.

#include <Eigen/Core>
#include <complex>
#include <stdexcept>
#include <utility>

#include "nlstirap/stability.hpp"

namespace nlstirap {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using CVec6 = Eigen::Matrix<std::complex<double>, 6, 1>;

// metric matrices eta+ = diag(I, -I), eta- = [[0, I], [-I, 0]]
const Mat6& eta_plus();
const Mat6& eta_minus();

struct DegenerateSpectrum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BogoliubovMode {
  std::complex<double> omega;
  Eigen::Vector3cd u, v;
  CVec6 w() const {
    CVec6 out;
    out.head<3>() = u;
    out.tail<3>() = v;
    return out;
  }
};

// Numeric eigenvectors at the closed-form frequencies, polished by inverse
// iteration so near-degenerate draws keep full accuracy.  Throws
// DegenerateSpectrum at exceptional points (omega1 ~ omega2), at zero
// collisions with the Goldstone pair (omega_i ~ 0), and when the bilinear
// norm vanishes (non-normalizable).
std::pair<BogoliubovMode, BogoliubovMode> bogoliubov_modes(double omega_p,
                                                           double omega_s,
                                                           double u_aa,
                                                           double delta_u);

struct GoldstonePair {
  Vec6 P;     // (Omega_s/2, 0, -Omega_p phi_a) twice; M P = 0 at any U_aa
  Vec6 Q;     // (q, -q) closed form; collisionless limit 2 p/(Omega_s Omega_eff)
  double nu;  // M Q = P/nu; +inf in the U_aa -> 0 fallback (zero mode pairs up)
};

GoldstonePair goldstone_pair(double omega_p, double omega_s, double u_aa,
                             double delta_u);

}  // namespace nlstirap
