#pragma once

// Explicit Runge-Kutta integrators for small fixed-size systems.
//
// `integrate` is the Dormand-Prince 5(4) embedded pair with an elementary
// step-size controller; `integrate_fixed` is classical RK4 on a uniform grid,
// kept for oracle computations that need a known convergence order.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "robin/errors.hpp"

namespace robin {

class IntegrationError : public SolverError {
 public:
  using SolverError::SolverError;
};

struct OdeTolerances {
  double abs = 1e-12;
  double rel = 1e-12;
  std::size_t max_steps = 2'000'000;
};

template <std::size_t N>
using OdeState = std::array<double, N>;

namespace detail {

template <std::size_t N>
OdeState<N> axpy(const OdeState<N>& y, double h, std::initializer_list<std::pair<double, const OdeState<N>*>> terms) {
  OdeState<N> out = y;
  for (const auto& [coef, k] : terms) {
    if (coef == 0.0) continue;
    for (std::size_t i = 0; i < N; ++i) out[i] += h * coef * (*k)[i];
  }
  return out;
}

}  // namespace detail

/// Advances `y` from t0 to t1 (t1 may be less than t0). `on_step(t, y)` is
/// invoked after every accepted step, including the last. `h_hint` carries a
/// step size between consecutive calls; pass 0 to let the integrator choose.
/// Returns the step size it would have tried next.
template <std::size_t N, class Rhs, class OnStep>
double integrate(const Rhs& rhs, OdeState<N>& y, double t0, double t1, const OdeTolerances& tol,
                 OnStep&& on_step, double h_hint = 0.0) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double span = t1 - t0;
  if (span == 0.0) return h_hint;
  const double dir = span > 0 ? 1.0 : -1.0;
  double h = h_hint != 0.0 ? std::min(std::fabs(h_hint), std::fabs(span))
                           : std::fabs(span) * 1e-3;
  double t = t0;

  OdeState<N> k1 = rhs(t, y);
  std::size_t steps = 0;
  while (dir * (t1 - t) > 0.0) {
    if (++steps > tol.max_steps) {
      std::ostringstream msg;
      msg << "ode: step budget exhausted at t=" << t << " integrating to " << t1;
      throw IntegrationError(msg.str());
    }
    bool last = false;
    if (h >= std::fabs(t1 - t)) {
      h = std::fabs(t1 - t);
      last = true;
    }
    const double hs = dir * h;
    const auto k2 = rhs(t + c2 * hs, detail::axpy<N>(y, hs, {{a21, &k1}}));
    const auto k3 = rhs(t + c3 * hs, detail::axpy<N>(y, hs, {{a31, &k1}, {a32, &k2}}));
    const auto k4 = rhs(t + c4 * hs, detail::axpy<N>(y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const auto k5 = rhs(t + c5 * hs,
                        detail::axpy<N>(y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const auto k6 = rhs(t + hs, detail::axpy<N>(y, hs,
                                                {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const auto y_new =
        detail::axpy<N>(y, hs, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const double t_new = last ? t1 : t + hs;
    const auto k7 = rhs(t_new, y_new);

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double e = hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double scale = tol.abs + tol.rel * std::max(std::fabs(y[i]), std::fabs(y_new[i]));
      err += (e / scale) * (e / scale);
    }
    err = std::sqrt(err / static_cast<double>(N));
    if (!std::isfinite(err)) {
      std::ostringstream msg;
      msg << "ode: non-finite state near t=" << t;
      throw IntegrationError(msg.str());
    }

    const double factor =
        err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    if (err <= 1.0) {
      t = t_new;
      y = y_new;
      k1 = k7;
      on_step(t, y);
      h *= factor;
    } else {
      h *= std::min(factor, 1.0);
      if (h < 1e-15 * std::max(1.0, std::fabs(t))) {
        std::ostringstream msg;
        msg << "ode: step size underflow at t=" << t;
        throw IntegrationError(msg.str());
      }
    }
  }
  return dir * h;
}

template <std::size_t N, class Rhs>
double integrate(const Rhs& rhs, OdeState<N>& y, double t0, double t1, const OdeTolerances& tol,
                 double h_hint = 0.0) {
  return integrate<N>(rhs, y, t0, t1, tol, [](double, const OdeState<N>&) {}, h_hint);
}

/// Classical RK4 with `steps` uniform steps.
template <std::size_t N, class Rhs>
void integrate_fixed(const Rhs& rhs, OdeState<N>& y, double t0, double t1, std::size_t steps) {
  const double h = (t1 - t0) / static_cast<double>(steps);
  double t = t0;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto k1 = rhs(t, y);
    const auto k2 = rhs(t + 0.5 * h, detail::axpy<N>(y, h, {{0.5, &k1}}));
    const auto k3 = rhs(t + 0.5 * h, detail::axpy<N>(y, h, {{0.5, &k2}}));
    const auto k4 = rhs(t + h, detail::axpy<N>(y, h, {{1.0, &k3}}));
    for (std::size_t i = 0; i < N; ++i) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    t = t0 + static_cast<double>(s + 1) * h;
  }
}

}  // namespace robin
