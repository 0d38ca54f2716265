#include "robin/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace robin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_planar_first(const RobinProblem& problem, const Eigenpair& pair, const char* fn) {
  const auto& domain = problem.domain();
  if (domain.dimension() != 2) {
    std::ostringstream msg;
    msg << fn << ": only defined for d = 2 (got d = " << domain.dimension() << ")";
    throw std::invalid_argument(msg.str());
  }
  if (domain.is_ball()) throw std::invalid_argument(std::string(fn) + ": domain must be an annulus");
  if (pair.mode.ell != 0 || pair.n != 1) {
    std::ostringstream msg;
    msg << fn << ": needs the first eigenpair (ell = 0, n = 1), got ell = " << pair.mode.ell
        << ", n = " << pair.n;
    throw std::invalid_argument(msg.str());
  }
}

RobinProblem planar_annulus(double r1, double r2, double alpha) {
  return RobinProblem(DomainSpec::annulus(2, r1, r2), alpha);
}

}  // namespace

BoundaryField BoundaryField::outer_normal() { return {Kind::OuterNormal, 1.0, 0.0}; }

BoundaryField BoundaryField::volume_preserving(const DomainSpec& domain, double outer_weight,
                                               double inner_weight) {
  if (domain.is_ball()) throw std::invalid_argument("volume-preserving pair needs an annulus");
  const double r1 = domain.inner_radius();
  const double r2 = domain.outer_radius();
  const double flux = outer_weight * r2 + inner_weight * r1;
  const double scale = std::fabs(outer_weight * r2) + std::fabs(inner_weight * r1);
  if (std::fabs(flux) > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "volume-preserving pair has net flux " << kTwoPi * flux;
    throw std::invalid_argument(msg.str());
  }
  return {Kind::VolumePreservingPair, outer_weight, inner_weight};
}

BoundaryField BoundaryField::volume_preserving(const DomainSpec& domain, double outer_weight) {
  if (domain.is_ball()) throw std::invalid_argument("volume-preserving pair needs an annulus");
  return volume_preserving(domain, outer_weight,
                           -outer_weight * domain.outer_radius() / domain.inner_radius());
}

double hadamard_derivative(const RobinProblem& problem, const Eigenpair& first,
                           const BoundaryField& field) {
  require_planar_first(problem, first, "hadamard_derivative");
  const double a = problem.alpha();
  const double lam = first.lambda;
  const double r1 = problem.domain().inner_radius();
  const double r2 = problem.domain().outer_radius();
  const double phi1 = first.profile.value.front();
  const double phi2 = first.profile.value.back();
  const double outer = kTwoPi * r2 * phi2 * phi2 * (-lam - a * a - a / r2) * field.outer_weight();
  const double inner = kTwoPi * r1 * phi1 * phi1 * (-lam - a * a + a / r1) * field.inner_weight();
  return outer + inner;
}

double relative_discrepancy(double value, double reference) {
  const double floor = 64 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(value));
  return std::fabs(value - reference) / std::max({std::fabs(value), std::fabs(reference), floor});
}

DerivativeReport derivative_report(const RobinProblem& problem, const BoundaryField& field,
                                   double fd_step, const SolverConfig& config) {
  const auto& domain = problem.domain();
  if (!(fd_step > 0.0)) throw std::invalid_argument("derivative_report: fd_step must be > 0");
  const Eigenpair first = first_eigenpair(problem, {}, config);
  DerivativeReport r;
  r.fd_step = fd_step;
  r.hadamard_value = hadamard_derivative(problem, first, field);

  auto lambda_at = [&](double t) {
    const double r1 = domain.inner_radius() - t * field.inner_weight();
    const double r2 = domain.outer_radius() + t * field.outer_weight();
    return first_eigenpair(RobinProblem(DomainSpec::annulus(2, r1, r2), problem.alpha()), {}, config)
        .lambda;
  };
  r.fd_value = (lambda_at(fd_step) - lambda_at(-fd_step)) / (2.0 * fd_step);
  r.rel_discrepancy = relative_discrepancy(r.hadamard_value, r.fd_value);
  return r;
}

double stationarity_G(const RobinProblem& problem, const Eigenpair& first) {
  require_planar_first(problem, first, "stationarity_G");
  const double a = problem.alpha();
  const double k2 = -first.lambda;
  const double r1 = problem.domain().inner_radius();
  const double r2 = problem.domain().outer_radius();
  const double phi1 = first.profile.value.front();
  const double phi2 = first.profile.value.back();
  return phi2 * phi2 * (k2 - a * a - a / r2) - phi1 * phi1 * (k2 - a * a + a / r1);
}

double stationarity_G(double r1, double r2, double alpha, const SolverConfig& config) {
  const RobinProblem problem = planar_annulus(r1, r2, alpha);
  return stationarity_G(problem, first_eigenpair(problem, {}, config));
}

double dG_dr2_formula(const RobinProblem& problem, const Eigenpair& first) {
  require_planar_first(problem, first, "dG_dr2_formula");
  const double a = problem.alpha();
  const double k2 = -first.lambda;
  const double r1 = problem.domain().inner_radius();
  const double r2 = problem.domain().outer_radius();
  const double phi1 = first.profile.value.front();
  const double phi2 = first.profile.value.back();
  return 2.0 * a * phi2 * phi2 * (k2 - a * a - a / r2 + 1.0 / (2.0 * r2 * r2)) +
         (2.0 * a * phi1 * phi1 * r2 / r1) * (k2 - a * a + a / r1 + 1.0 / (2.0 * r1 * r1));
}

double dG_dr2_formula(double r1, double r2, double alpha, const SolverConfig& config) {
  const RobinProblem problem = planar_annulus(r1, r2, alpha);
  return dG_dr2_formula(problem, first_eigenpair(problem, {}, config));
}

double dG_dr2_fd(double r1, double r2, double alpha, double h, const SolverConfig& config) {
  const double rel = h / r2;
  if (!(rel >= kMinRelativeFdStep)) {
    std::ostringstream msg;
    msg << "dG_dr2_fd: step h=" << h << " is below " << kMinRelativeFdStep
        << "*r2; cancellation would dominate";
    throw std::invalid_argument(msg.str());
  }
  if (rel > kMaxRelativeFdStep) {
    std::ostringstream msg;
    msg << "dG_dr2_fd: step h=" << h << " exceeds " << kMaxRelativeFdStep
        << "*r2; truncation error would dominate";
    throw std::invalid_argument(msg.str());
  }
  const double c = r2 * r2 - r1 * r1;
  auto g_at = [&](double outer) {
    const double inner2 = outer * outer - c;
    if (!(inner2 > 0.0)) throw std::invalid_argument("dG_dr2_fd: step collapses the inner radius");
    return stationarity_G(std::sqrt(inner2), outer, alpha, config);
  };
  return (g_at(r2 + h) - g_at(r2 - h)) / (2.0 * h);
}

double locate_stationary_alpha(double r1, double r2, double alpha_lo, double alpha_hi,
                               const SolverConfig& config) {
  if (!(0.0 < alpha_lo && alpha_lo < alpha_hi))
    throw std::invalid_argument("locate_stationary_alpha: need 0 < alpha_lo < alpha_hi");
  auto g = [&](double a) { return stationarity_G(r1, r2, a, config); };
  const double g_lo = g(alpha_lo);
  const double g_hi = g(alpha_hi);
  if ((g_lo > 0) == (g_hi > 0) && g_lo != 0.0 && g_hi != 0.0) {
    std::ostringstream msg;
    msg << "locate_stationary_alpha: G has the same sign at alpha=" << alpha_lo << " (" << g_lo
        << ") and alpha=" << alpha_hi << " (" << g_hi << ")";
    throw SolverError(msg.str());
  }
  RootOptions opt;
  opt.abs_tol = 1e-13;
  return brent(g, alpha_lo, alpha_hi, g_lo, g_hi, opt);
}

CriticalAlpha locate_alpha_c(double r1, double r2, const std::vector<double>& alpha_grid,
                             const SolverConfig& config) {
  if (alpha_grid.size() < 2 || !std::is_sorted(alpha_grid.begin(), alpha_grid.end()))
    throw std::invalid_argument("locate_alpha_c: need an increasing grid of at least 2 values");
  CriticalAlpha out;
  out.alphas = alpha_grid;
  for (double a : alpha_grid) out.values.push_back(dG_dr2_formula(r1, r2, a, config));

  std::size_t last_nonpositive = out.values.size();
  for (std::size_t i = 0; i < out.values.size(); ++i)
    if (out.values[i] <= 0.0) last_nonpositive = i;
  if (last_nonpositive == out.values.size()) {
    out.alpha_c = alpha_grid.front();
    return out;
  }
  if (last_nonpositive + 1 == out.values.size())
    throw SolverError("locate_alpha_c: dG/dr2 is not positive at the top of the scan");

  double lo = alpha_grid[last_nonpositive];
  double hi = alpha_grid[last_nonpositive + 1];
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (dG_dr2_formula(r1, r2, mid, config) > 0.0) hi = mid;
    else lo = mid;
  }
  out.alpha_c = hi;
  out.bracketed = true;
  return out;
}

RiccatiTrace riccati_trace(const RobinProblem& problem, const Eigenpair& first,
                           std::size_t samples, const SolverConfig& config) {
  require_planar_first(problem, first, "riccati_trace");
  if (samples < 5 || samples % 2 == 0)
    throw std::invalid_argument("riccati_trace: samples must be odd and >= 5");
  RadialProfile prof;
  if (first.c1 && first.c2) {
    const double r1 = problem.domain().inner_radius();
    const double r2 = problem.domain().outer_radius();
    for (std::size_t i = 0; i < samples; ++i) {
      const double r = i + 1 == samples ? r2 : r1 + (r2 - r1) * static_cast<double>(i) / static_cast<double>(samples - 1);
      const auto pv = bessel_profile_at(problem, first, r);
      prof.radius.push_back(r);
      prof.value.push_back(pv.value);
      prof.slope.push_back(pv.slope);
    }
  } else {
    SolverConfig dense = config;
    dense.profile_points = samples;
    prof = shooting_eigenpair(problem, first.mode, first.lambda, dense).profile;
  }
  const std::size_t n = prof.size();

  RiccatiTrace tr;
  tr.lambda = first.lambda;
  tr.alpha = problem.alpha();
  tr.grid = prof.radius;
  tr.z.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(prof.value[i] > 0.0)) {
      std::ostringstream msg;
      msg << "riccati_trace: eigenfunction is not positive at r=" << prof.radius[i];
      throw SolverError(msg.str());
    }
    tr.z[i] = prof.slope[i] / prof.value[i];
  }

  const double h = (tr.grid.back() - tr.grid.front()) / static_cast<double>(n - 1);
  const auto& z = tr.z;
  tr.dz.resize(n);
  for (std::size_t i = 2; i + 2 < n; ++i)
    tr.dz[i] = (z[i - 2] - 8.0 * z[i - 1] + 8.0 * z[i + 1] - z[i + 2]) / (12.0 * h);
  tr.dz[0] = (-25.0 * z[0] + 48.0 * z[1] - 36.0 * z[2] + 16.0 * z[3] - 3.0 * z[4]) / (12.0 * h);
  tr.dz[1] = (-3.0 * z[0] - 10.0 * z[1] + 18.0 * z[2] - 6.0 * z[3] + z[4]) / (12.0 * h);
  tr.dz[n - 1] = (25.0 * z[n - 1] - 48.0 * z[n - 2] + 36.0 * z[n - 3] - 16.0 * z[n - 4] + 3.0 * z[n - 5]) /
                 (12.0 * h);
  tr.dz[n - 2] = (3.0 * z[n - 1] + 10.0 * z[n - 2] - 18.0 * z[n - 3] + 6.0 * z[n - 4] - z[n - 5]) /
                 (12.0 * h);

  const double lam = tr.lambda;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = tr.grid[i];
    tr.max_residual = std::max(tr.max_residual, std::fabs(tr.dz[i] + z[i] * z[i] + z[i] / r + lam));
  }

  // ξ: last sign change of z, refined on the cubic Hermite interpolant whose
  // nodal slopes come from the Riccati equation itself.
  std::size_t j = n;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (z[i] < 0.0 && z[i + 1] >= 0.0) j = i;
  if (j == n) throw SolverError("riccati_trace: z has no sign change on the grid");
  auto riccati = [&](double r, double zz) { return -zz * zz - zz / r - lam; };
  const double a = tr.grid[j], b = tr.grid[j + 1];
  const double za = z[j], zb = z[j + 1];
  const double ma = riccati(a, za) * (b - a), mb = riccati(b, zb) * (b - a);
  auto hermite = [&](double t) {
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * za + (t3 - 2 * t2 + t) * ma + (-2 * t3 + 3 * t2) * zb +
           (t3 - t2) * mb;
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hermite(mid) < 0.0) lo = mid;
    else hi = mid;
  }
  const double t = 0.5 * (lo + hi);
  tr.xi = a + t * (b - a);
  tr.slope_at_xi = (1.0 - t) * tr.dz[j] + t * tr.dz[j + 1];
  const double r2 = tr.grid.back();
  tr.endpoint_slope = -(lam + tr.alpha * tr.alpha + tr.alpha / r2);
  tr.endpoint_slope_fd = tr.dz.back();
  return tr;
}

}  // namespace robin
