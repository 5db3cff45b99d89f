#pragma once
// Embedded Dormand-Prince 5(4) with the standard quartic dense-output
// interpolant.  Non-stiff driver for the mean-field equations; state is any
// fixed-size Eigen vector (real or complex scalars).

#include <Eigen/Core>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace nlstirap {

struct OdeOptions {
  double rtol = 1e-9;
  double atol = 1e-9;
  double h_init = 1e-3;
  double h_max = std::numeric_limits<double>::infinity();
  long max_steps = 20'000'000;
};

struct OdeFailure : std::runtime_error {
  double t;
  OdeFailure(const std::string& what, double t_) : std::runtime_error(what), t(t_) {}
};

namespace dp5 {
// Butcher tableau
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                        a75 = -2187.0 / 6784, a76 = 11.0 / 84;  // = 5th-order b, FSAL
// embedded error weights b - bhat
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense-output weights
inline constexpr double d1 = -12715105075.0 / 11282082432.0,
                        d3 = 87487479700.0 / 32700410799.0,
                        d4 = -10690763975.0 / 1880347072.0,
                        d5 = 701980252875.0 / 199316789632.0,
                        d6 = -1453857185.0 / 822651844.0,
                        d7 = 69997945.0 / 29380423.0;
}  // namespace dp5

// Integrate y' = rhs(t, y) from t0 to t1 (t1 > t0).  Every time in `samples`
// (ascending, inside [t0, t1]) triggers sink(t, y(t)) via the dense
// interpolant; the state at t1 is returned.
template <class State, class Rhs, class Sink>
State integrate_dopri5(Rhs&& rhs, double t0, State y, double t1,
                       const std::vector<double>& samples, Sink&& sink,
                       const OdeOptions& opt = {}) {
  using std::abs;
  if (!(t1 > t0)) throw std::invalid_argument("integrate_dopri5: need t1 > t0");

  const double span = t1 - t0;
  const double h_floor = 1e-14 * std::max(1.0, std::max(abs(t0), abs(t1)));
  const int n = static_cast<int>(y.size());

  auto err_norm = [&](const State& e, const State& ya, const State& yb) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double sc = opt.atol + opt.rtol * std::max(abs(ya[i]), abs(yb[i]));
      const double q = abs(e[i]) / sc;
      acc += q * q;
    }
    return std::sqrt(acc / n);
  };
  auto finite = [&](const State& v) {
    for (int i = 0; i < n; ++i)
      if (!std::isfinite(abs(v[i]))) return false;
    return true;
  };

  std::size_t next_sample = 0;
  while (next_sample < samples.size() && samples[next_sample] <= t0) {
    sink(samples[next_sample], y);
    ++next_sample;
  }

  double t = t0;
  double h = std::min({opt.h_init, opt.h_max, span});
  State k1 = rhs(t, y);
  long steps = 0;

  while (t1 - t > h_floor) {
    if (++steps > opt.max_steps) throw OdeFailure("step budget exhausted", t);
    if (h < h_floor) throw OdeFailure("step size underflow", t);
    h = std::min(h, t1 - t);

    using namespace dp5;
    const State k2 = rhs(t + c2 * h, (y + h * (a21 * k1)).eval());
    const State k3 = rhs(t + c3 * h, (y + h * (a31 * k1 + a32 * k2)).eval());
    const State k4 = rhs(t + c4 * h, (y + h * (a41 * k1 + a42 * k2 + a43 * k3)).eval());
    const State k5 =
        rhs(t + c5 * h, (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)).eval());
    const State k6 = rhs(
        t + h, (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)).eval());
    const State ynew =
        y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
    const State k7 = rhs(t + h, ynew);
    const State errv =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = finite(ynew) ? err_norm(errv, y, ynew)
                              : std::numeric_limits<double>::infinity();
    if (!std::isfinite(err)) {
      // NaN/overflow guard: shrink hard and retry
      h *= 0.1;
      if (h < h_floor) throw OdeFailure("non-finite state", t);
      continue;
    }

    if (err <= 1.0) {  // accept
      // dense interpolant over [t, t+h]
      if (next_sample < samples.size() && samples[next_sample] <= t + h) {
        const State dy = ynew - y;
        const State r3 = h * k1 - dy;
        const State r4 = dy - h * k7 - r3;
        const State r5 =
            h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
        while (next_sample < samples.size() && samples[next_sample] <= t + h) {
          const double th = (samples[next_sample] - t) / h;
          const State ys =
              y + th * (dy + (1.0 - th) * (r3 + th * (r4 + (1.0 - th) * r5)));
          sink(samples[next_sample], ys);
          ++next_sample;
        }
      }
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      double fac = 0.9 * std::pow(std::max(err, 1e-16), -0.2);
      h = std::min(h * std::min(std::max(fac, 0.2), 10.0), opt.h_max);
    } else {
      double fac = 0.9 * std::pow(err, -0.2);
      h *= std::min(std::max(fac, 0.2), 1.0);
    }
  }

  while (next_sample < samples.size()) {  // samples at (or past) t1
    sink(samples[next_sample], y);
    ++next_sample;
  }
  return y;
}

template <class State, class Rhs>
State integrate_dopri5(Rhs&& rhs, double t0, State y, double t1,
                       const OdeOptions& opt = {}) {
  return integrate_dopri5(std::forward<Rhs>(rhs), t0, std::move(y), t1, {},
                          [](double, const State&) {}, opt);
}

}  // namespace nlstirap
