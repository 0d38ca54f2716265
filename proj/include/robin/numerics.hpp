#pragma once

// Scalar root bracketing and Gauss-Legendre quadrature.

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "robin/errors.hpp"

namespace robin {

class RootError : public SolverError {
 public:
  using SolverError::SolverError;
};

struct RootOptions {
  double abs_tol = 1e-14;
  double rel_tol = 4 * std::numeric_limits<double>::epsilon();
  int max_iterations = 200;
};

/// Brent's method (bisection / secant / inverse quadratic) on a sign-changing
/// bracket [a, b]. fa and fb are f(a) and f(b).
template <class F>
double brent(const F& f, double a, double b, double fa, double fb, const RootOptions& opt = {}) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0)) {
    std::ostringstream msg;
    msg << "brent: no sign change on [" << a << ", " << b << "]";
    throw RootError(msg.str());
  }
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int it = 0; it < opt.max_iterations; ++it) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * opt.rel_tol * std::fabs(b) + 0.5 * opt.abs_tol;
    const double m = 0.5 * (c - b);
    if (std::fabs(m) <= tol || fb == 0.0) return b;
    if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q;
      else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol * q), std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol ? d : (m > 0 ? tol : -tol);
    fb = f(b);
  }
  throw RootError("brent: iteration limit reached");
}

template <class F>
double brent(const F& f, double a, double b, const RootOptions& opt = {}) {
  return brent(f, a, b, f(a), f(b), opt);
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
  explicit GaussLegendre(std::size_t n);
};

/// Composite Gauss-Legendre: `panels` equal panels of a `order`-point rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    std::size_t panels = 64, std::size_t order = 20);

}  // namespace robin
