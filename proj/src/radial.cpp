#include "robin/radial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "robin/bessel.hpp"

namespace robin {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

double centrifugal(const DomainSpec& domain, const ModeSpec& mode) {
  return static_cast<double>(mode.ell) * (mode.ell + domain.dimension() - 2);
}

// y = (φ, φ') for the scan; y = (φ, φ', ∫φ²ρ^{d-1}) when building profiles.
template <std::size_t N>
struct RadialRhs {
  int dim;
  double angular;
  double lambda;

  OdeState<N> operator()(double r, const OdeState<N>& y) const {
    OdeState<N> dy{};
    dy[0] = y[1];
    dy[1] = -(dim - 1) / r * y[1] + (angular / (r * r) - lambda) * y[0];
    if constexpr (N == 3) dy[2] = y[0] * y[0] * ipow(r, dim - 1);
    return dy;
  }
};

struct Start {
  double radius;
  double value;
  double slope;
  double h_hint;
};

Start launch(const RobinProblem& problem, const ModeSpec& mode, double lambda,
             const SolverConfig& config) {
  const auto& domain = problem.domain();
  if (!domain.is_ball()) return {domain.inner_radius(), 1.0, -problem.alpha(), 0.0};
  const double r0 = config.ball_start * domain.outer_radius();
  const int ell = mode.ell;
  const double c = -lambda / (2.0 * (2.0 * ell + domain.dimension()));
  const double value = ipow(r0, ell) * (1.0 + c * r0 * r0);
  const double slope = (ell > 0 ? ell * ipow(r0, ell - 1) * (1.0 + c * r0 * r0) : 0.0) +
                       2.0 * c * ipow(r0, ell + 1);
  return {r0, value, slope, r0};
}

void check_lambda(double lambda) {
  if (!std::isfinite(lambda)) throw std::invalid_argument("eigenvalue candidate must be finite");
}

int count_from(const ShotResult& s) {
  return s.interior_zeros + (s.residual * s.value <= 0.0 ? 1 : 0);
}

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = i + 1 == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

std::vector<double> profile_grid(const DomainSpec& domain, std::size_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("profile_points must be odd and >= 3");
  return uniform_grid(domain.inner_radius(), domain.outer_radius(), n);
}

void normalize_sign(Eigenpair& pair) {
  auto& v = pair.profile.value;
  const auto it = std::find_if(v.begin(), v.end(), [](double x) { return x != 0.0; });
  if (it == v.end() || *it > 0) return;
  for (auto& x : v) x = -x;
  for (auto& x : pair.profile.slope) x = -x;
  if (pair.c1) pair.c1 = -*pair.c1;
  if (pair.c2) pair.c2 = -*pair.c2;
}

}  // namespace

// ---- shooting ----------------------------------------------------------------

ShotResult shoot_detailed(const RobinProblem& problem, const ModeSpec& mode, double lambda,
                          const SolverConfig& config) {
  check_lambda(lambda);
  const auto& domain = problem.domain();
  const Start s = launch(problem, mode, lambda, config);
  const RadialRhs<2> rhs{domain.dimension(), centrifugal(domain, mode), lambda};
  OdeState<2> y{s.value, s.slope};
  int zeros = 0;
  bool positive = y[0] > 0;
  const double R = domain.outer_radius();
  integrate<2>(rhs, y, s.radius, R, config.ode,
               [&](double, const OdeState<2>& st) {
                 if (st[0] == 0.0) return;
                 const bool p = st[0] > 0;
                 if (p != positive) ++zeros;
                 positive = p;
               },
               s.h_hint);
  ShotResult r;
  r.value = y[0];
  r.slope = y[1];
  r.residual = y[1] - problem.alpha() * y[0];
  r.interior_zeros = zeros;
  return r;
}

double shoot(const RobinProblem& problem, const ModeSpec& mode, double lambda,
             const SolverConfig& config) {
  return shoot_detailed(problem, mode, lambda, config).residual;
}

int eigenvalue_count(const RobinProblem& problem, const ModeSpec& mode, double lambda,
                     const SolverConfig& config) {
  return count_from(shoot_detailed(problem, mode, lambda, config));
}

double window_floor(const RobinProblem& problem) {
  const auto& domain = problem.domain();
  const double R = domain.outer_radius();
  // Only a starting guess; default_window walks down until the count is zero.
  // A tiny hole must not push it towards overflow.
  const double scale = domain.is_ball() ? R : std::min(R, 0.5 * (R - domain.inner_radius()));
  const double curvature = std::max(1, domain.dimension() - 1) / scale;
  return -std::pow(problem.alpha() + curvature, 2) - 10.0;
}

Window default_window(const RobinProblem& problem, const ModeSpec& mode,
                      const SolverConfig& config) {
  double lo = window_floor(problem);
  for (int attempt = 0; eigenvalue_count(problem, mode, lo, config) > 0; ++attempt) {
    if (attempt == 30) throw SolverError("default_window: could not get below the first eigenvalue");
    lo *= 4.0;
  }
  return {lo, 0.0};
}

Eigenpair shooting_eigenpair(const RobinProblem& problem, const ModeSpec& mode, double lambda,
                             const SolverConfig& config) {
  check_lambda(lambda);
  const auto& domain = problem.domain();
  const int d = domain.dimension();
  const Start s = launch(problem, mode, lambda, config);
  const RadialRhs<3> rhs{d, centrifugal(domain, mode), lambda};
  const auto grid = profile_grid(domain, config.profile_points);

  Eigenpair pair;
  pair.mode = mode;
  pair.lambda = lambda;
  pair.k = lambda < 0 ? std::sqrt(-lambda) : 0.0;
  auto& prof = pair.profile;
  prof.radius = grid;
  prof.value.resize(grid.size());
  prof.slope.resize(grid.size());

  OdeState<3> y{s.value, s.slope, 0.0};
  double t = s.radius;
  double h = s.h_hint;
  std::size_t first = 0;
  if (domain.is_ball()) {
    prof.value[0] = mode.ell == 0 ? 1.0 : 0.0;
    prof.slope[0] = mode.ell == 1 ? 1.0 : 0.0;
    // ∫_0^{ρ0} ρ^{2 ell + d - 1} dρ for the leading term of the series start.
    y[2] = ipow(s.radius, 2 * mode.ell + d) / (2 * mode.ell + d);
    first = 1;
  }
  for (std::size_t i = first; i < grid.size(); ++i) {
    if (grid[i] > t) h = integrate<3>(rhs, y, t, grid[i], config.ode, h);
    t = grid[i];
    prof.value[i] = y[0];
    prof.slope[i] = y[1];
  }
  const double mass = unit_sphere_area(d) * y[2];
  const double scale = 1.0 / std::sqrt(mass);
  for (auto& v : prof.value) v *= scale;
  for (auto& v : prof.slope) v *= scale;
  normalize_sign(pair);
  pair.n = interior_sign_changes(prof) + 1;
  return pair;
}

EigenSearch find_eigenvalues(const RobinProblem& problem, const ModeSpec& mode, Window window,
                             std::size_t max_count, const SolverConfig& config) {
  if (!(window.lo < window.hi) || !std::isfinite(window.lo) || !std::isfinite(window.hi))
    throw std::invalid_argument("find_eigenvalues: window must satisfy lo < hi");
  if (max_count == 0) throw std::invalid_argument("find_eigenvalues: max_count must be >= 1");
  if (config.scan_points < 2) throw std::invalid_argument("find_eigenvalues: scan_points must be >= 2");

  struct Sample {
    double lambda;
    ShotResult shot;
    int count;
  };
  auto sample = [&](double lam) {
    const ShotResult s = shoot_detailed(problem, mode, lam, config);
    return Sample{lam, s, count_from(s)};
  };

  std::vector<std::pair<Sample, Sample>> brackets;
  // Splits (a, b] until each piece holds at most one eigenvalue.
  auto split = [&](auto&& self, const Sample& a, const Sample& b) -> void {
    const int jump = b.count - a.count;
    if (jump < 0) {
      std::ostringstream msg;
      msg << "find_eigenvalues: oscillation count decreased between λ=" << a.lambda << " and "
          << b.lambda;
      throw SolverError(msg.str());
    }
    if (jump == 0) return;
    if (jump == 1) {
      brackets.emplace_back(a, b);
      return;
    }
    if (b.lambda - a.lambda <= 1e-12 * std::max(1.0, std::fabs(a.lambda))) {
      std::ostringstream msg;
      msg << "find_eigenvalues: cannot separate " << jump << " eigenvalues near λ=" << a.lambda;
      throw SolverError(msg.str());
    }
    const Sample mid = sample(0.5 * (a.lambda + b.lambda));
    self(self, a, mid);
    self(self, mid, b);
  };

  EigenSearch out;
  const auto grid = uniform_grid(window.lo, window.hi, config.scan_points);
  Sample prev = sample(grid[0]);
  out.skipped_below = prev.count;
  for (std::size_t i = 1; i < grid.size() && brackets.size() < max_count; ++i) {
    Sample cur = sample(grid[i]);
    split(split, prev, cur);
    prev = cur;
  }
  if (brackets.size() > max_count) {
    brackets.resize(max_count);
    out.truncated = true;
  } else if (brackets.size() == max_count && prev.lambda < window.hi) {
    out.truncated = eigenvalue_count(problem, mode, window.hi, config) > prev.count;
  }

  auto residual = [&](double lam) { return shoot(problem, mode, lam, config); };
  for (auto& [a, b] : brackets) {
    double lam;
    if (b.shot.residual == 0.0) {
      lam = b.lambda;
    } else {
      double lo = a.lambda;
      double f_lo = a.shot.residual;
      // The eigenvalue sitting exactly at lo belongs to the previous bracket.
      while (f_lo == 0.0) {
        lo += 1e-12 * (b.lambda - a.lambda);
        f_lo = residual(lo);
      }
      lam = brent(residual, lo, b.lambda, f_lo, b.shot.residual, config.root);
    }
    Eigenpair pair = shooting_eigenpair(problem, mode, lam, config);
    const int n = b.count;
    const ShotResult at_root = shoot_detailed(problem, mode, lam, config);
    if (at_root.interior_zeros != n - 1) {
      std::ostringstream msg;
      msg << "find_eigenvalues: eigenfunction at λ=" << lam << " has " << at_root.interior_zeros
          << " interior zeros, expected " << n - 1;
      throw SolverError(msg.str());
    }
    pair.n = n;
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

std::vector<Eigenpair> lowest_eigenpairs(const RobinProblem& problem, const ModeSpec& mode_in,
                                         std::size_t count, const SolverConfig& config) {
  if (count == 0) throw std::invalid_argument("lowest_eigenpairs: count must be >= 1");
  const ModeSpec mode = ModeSpec::make(problem.domain().dimension(), mode_in.ell);
  Window w = default_window(problem, mode, config);
  for (int attempt = 0; eigenvalue_count(problem, mode, w.hi, config) < static_cast<int>(count);
       ++attempt) {
    if (attempt == 40) throw SolverError("lowest_eigenpairs: could not enclose the requested eigenvalues");
    w.hi = w.hi <= 0.0 ? 1.0 : 4.0 * w.hi;
  }
  auto found = find_eigenvalues(problem, mode, w, count, config);
  if (found.pairs.size() < count) throw SolverError("lowest_eigenpairs: fewer eigenvalues than requested");
  return std::move(found.pairs);
}

Eigenpair first_eigenpair(const RobinProblem& problem, const ModeSpec& mode,
                          const SolverConfig& config) {
  return std::move(lowest_eigenpairs(problem, mode, 1, config).front());
}

// ---- Bessel engine -----------------------------------------------------------

namespace {

struct BoundaryRows {
  // Entry [row][col]; rows = inner, outer condition; cols = K, I.
  double m[2][2];
  double k_scale;  // K_ν(k r1)
  double i_scale;  // I_ν(k r2)
};

double half_order(const DomainSpec& domain) { return 0.5 * (domain.dimension() - 2); }

void check_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw std::domain_error("characteristic_det: k must be > 0");
}

// Column-normalized boundary matrix on an annulus.
BoundaryRows annulus_rows(const RobinProblem& problem, const ModeSpec& mode, double k) {
  const auto& domain = problem.domain();
  const double p = half_order(domain);
  const double nu = mode.effective_order;
  const double alpha = problem.alpha();
  const double r1 = domain.inner_radius();
  const double r2 = domain.outer_radius();
  const auto in = bessel::evaluate(nu, k * r1);
  const auto out = bessel::evaluate(nu, k * r2);

  BoundaryRows b{};
  b.k_scale = in.k;
  b.i_scale = out.i;
  // Robin rows: inner -φ' - αφ, outer φ' - αφ, with ρ^p φ' = k Z' - (p/ρ) Z.
  b.m[0][0] = (-(k * in.k_prime - p / r1 * in.k) - alpha * in.k) / b.k_scale;
  b.m[0][1] = (-(k * in.i_prime - p / r1 * in.i) - alpha * in.i) / b.i_scale;
  b.m[1][0] = ((k * out.k_prime - p / r2 * out.k) - alpha * out.k) / b.k_scale;
  b.m[1][1] = ((k * out.i_prime - p / r2 * out.i) - alpha * out.i) / b.i_scale;
  return b;
}

double ball_condition(const RobinProblem& problem, const ModeSpec& mode, double k) {
  const auto& domain = problem.domain();
  const double R = domain.outer_radius();
  const auto v = bessel::evaluate(mode.effective_order, k * R);
  return k * v.i_prime / v.i - half_order(domain) / R - problem.alpha();
}

double row_normalized_det(const BoundaryRows& b) {
  double m[2][2];
  for (int r = 0; r < 2; ++r) {
    const double s = std::max(std::fabs(b.m[r][0]), std::fabs(b.m[r][1]));
    for (int c = 0; c < 2; ++c) m[r][c] = s > 0 ? b.m[r][c] / s : 0.0;
  }
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

}  // namespace

double characteristic_det(const RobinProblem& problem, const ModeSpec& mode, double k) {
  check_k(k);
  if (problem.domain().is_ball()) return ball_condition(problem, mode, k);
  return row_normalized_det(annulus_rows(problem, mode, k));
}

double characteristic_det_zero(const RobinProblem& problem, const ModeSpec& mode) {
  const auto& domain = problem.domain();
  const int d = domain.dimension();
  const int ell = mode.ell;
  const double alpha = problem.alpha();
  const double R = domain.outer_radius();
  if (domain.is_ball()) return ell / R - alpha;

  // Basis ρ^ell and ρ^{-(ell+d-2)} (log ρ when both exponents vanish).
  auto u1 = [&](double r) { return PointValue{std::pow(r, ell), ell * std::pow(r, ell - 1)}; };
  auto u2 = [&](double r) {
    if (ell == 0 && d == 2) return PointValue{std::log(r), 1.0 / r};
    const int e = ell + d - 2;
    return PointValue{std::pow(r, -e), -e * std::pow(r, -e - 1)};
  };
  const double r1 = domain.inner_radius();
  BoundaryRows b{};
  const auto a1 = u1(r1), a2 = u2(r1), c1 = u1(R), c2 = u2(R);
  b.m[0][0] = -a1.slope - alpha * a1.value;
  b.m[0][1] = -a2.slope - alpha * a2.value;
  b.m[1][0] = c1.slope - alpha * c1.value;
  b.m[1][1] = c2.slope - alpha * c2.value;
  return row_normalized_det(b);
}

PointValue bessel_profile_at(const RobinProblem& problem, const Eigenpair& pair, double rho) {
  if (!pair.c1 || !pair.c2) throw std::invalid_argument("bessel_profile_at: eigenpair has no Bessel coefficients");
  const auto& domain = problem.domain();
  const double p = half_order(domain);
  const double nu = pair.mode.effective_order;
  const double k = pair.k;
  if (rho == 0.0) {
    if (!domain.is_ball()) throw std::domain_error("bessel_profile_at: radius outside the annulus");
    // ρ^{-p} I_ν(kρ) ~ (k/2)^ν ρ^ell / Γ(ν+1)
    const double lead = *pair.c2 * std::pow(0.5 * k, nu) / std::tgamma(nu + 1.0);
    return {pair.mode.ell == 0 ? lead : 0.0, pair.mode.ell == 1 ? lead : 0.0};
  }
  const auto v = bessel::evaluate(nu, k * rho);
  const double scale = std::pow(rho, -p);
  double value = *pair.c2 * v.i;
  double slope = *pair.c2 * (k * v.i_prime - p / rho * v.i);
  if (*pair.c1 != 0.0) {
    value += *pair.c1 * v.k;
    slope += *pair.c1 * (k * v.k_prime - p / rho * v.k);
  }
  return {scale * value, scale * slope};
}

Eigenpair eigenvalue_bessel(const RobinProblem& problem, const ModeSpec& mode_in,
                            const SolverConfig& config) {
  const auto& domain = problem.domain();
  const int d = domain.dimension();
  const ModeSpec mode = ModeSpec::make(d, mode_in.ell);
  const double R = domain.outer_radius();
  const double k_max = std::min(std::sqrt(-window_floor(problem)), bessel::kMaxArgument / R);
  const double k_min = 1e-6 * k_max;
  const std::size_t n = std::max<std::size_t>(config.bessel_scan_points, 2);

  auto det = [&](double k) { return characteristic_det(problem, mode, k); };
  double k_hi = k_max;
  double f_hi = det(k_hi);
  double root = -1.0;
  for (std::size_t i = 1; i < n && root < 0; ++i) {
    const double k_lo = k_max - (k_max - k_min) * static_cast<double>(i) / static_cast<double>(n - 1);
    const double f_lo = det(k_lo);
    if (f_hi == 0.0) {
      root = k_hi;
    } else if (f_lo == 0.0 || (f_lo > 0) != (f_hi > 0)) {
      RootOptions opt = config.root;
      opt.abs_tol = 0.0;
      root = brent(det, k_lo, k_hi, f_lo, f_hi, opt);
    }
    k_hi = k_lo;
    f_hi = f_lo;
  }
  if (root < 0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "eigenvalue_bessel: no sign change of the characteristic function for k in [" << k_min
        << ", " << k_max << "] (" << domain.describe() << ", alpha=" << problem.alpha()
        << ", ell=" << mode.ell << ")";
    throw SolverError(msg.str());
  }

  Eigenpair pair;
  pair.mode = mode;
  pair.k = root;
  pair.lambda = -root * root;
  if (domain.is_ball()) {
    pair.c1 = 0.0;
    pair.c2 = 1.0;
  } else {
    const BoundaryRows b = annulus_rows(problem, mode, root);
    const int row = std::hypot(b.m[0][0], b.m[0][1]) >= std::hypot(b.m[1][0], b.m[1][1]) ? 0 : 1;
    const double c1s = b.m[row][1];
    const double c2s = -b.m[row][0];
    const double norm = std::hypot(c1s, c2s);
    pair.c1 = c1s / norm / b.k_scale;
    pair.c2 = c2s / norm / b.i_scale;
  }

  const double r_start = domain.inner_radius();
  const double mass = unit_sphere_area(d) *
                      integrate_gl(
                          [&](double r) {
                            const double v = bessel_profile_at(problem, pair, r).value;
                            return v * v * ipow(r, d - 1);
                          },
                          r_start, R, 64, 20);
  const double scale = 1.0 / std::sqrt(mass);
  *pair.c1 *= scale;
  *pair.c2 *= scale;

  auto& prof = pair.profile;
  prof.radius = profile_grid(domain, config.profile_points);
  prof.value.resize(prof.radius.size());
  prof.slope.resize(prof.radius.size());
  for (std::size_t i = 0; i < prof.radius.size(); ++i) {
    const auto pv = bessel_profile_at(problem, pair, prof.radius[i]);
    prof.value[i] = pv.value;
    prof.slope[i] = pv.slope;
  }
  normalize_sign(pair);
  pair.n = interior_sign_changes(prof) + 1;
  return pair;
}

// ---- spectrum ----------------------------------------------------------------

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  for (const auto& e : entries)
    for (long m = 0; m < e.multiplicity && out.size() < count; ++m) out.push_back(e.lambda);
  return out;
}

Spectrum assemble_spectrum(const RobinProblem& problem, int max_ell, std::size_t count,
                           const SolverConfig& config) {
  if (max_ell < 0) throw std::invalid_argument("assemble_spectrum: L_max must be >= 0");
  if (count == 0) throw std::invalid_argument("assemble_spectrum: count must be >= 1");
  const int d = problem.domain().dimension();

  Spectrum spec;
  spec.count = count;
  auto add = [&](const EigenSearch& found, const ModeSpec& mode) {
    for (const auto& p : found.pairs) spec.entries.push_back({p.lambda, mode.multiplicity, mode.ell, p.n});
    std::sort(spec.entries.begin(), spec.entries.end(), [](const auto& a, const auto& b) {
      if (a.lambda != b.lambda) return a.lambda < b.lambda;
      if (a.ell != b.ell) return a.ell < b.ell;
      return a.n < b.n;
    });
  };
  auto cutoff = [&]() {
    std::size_t seen = 0;
    for (const auto& e : spec.entries) {
      seen += static_cast<std::size_t>(e.multiplicity);
      if (seen >= count) return e.lambda;
    }
    throw SolverError("assemble_spectrum: fewer eigenvalues than requested");
  };

  {
    const ModeSpec radial = ModeSpec::make(d, 0);
    Window w = default_window(problem, radial, config);
    for (int attempt = 0;
         eigenvalue_count(problem, radial, w.hi, config) < static_cast<int>(count); ++attempt) {
      if (attempt == 40) throw SolverError("assemble_spectrum: could not enclose the radial eigenvalues");
      w.hi = w.hi <= 0.0 ? 1.0 : 4.0 * w.hi;
    }
    add(find_eigenvalues(problem, radial, w, count, config), radial);
  }

  for (int ell = 1;; ++ell) {
    const ModeSpec mode = ModeSpec::make(d, ell);
    const double top = cutoff();
    const int below = eigenvalue_count(problem, mode, top, config);
    if (below == 0) break;
    if (ell > max_ell) {
      std::ostringstream msg;
      msg << "assemble_spectrum: L_max=" << max_ell << " is insufficient; mode ell=" << ell
          << " has " << below << " eigenvalue(s) <= " << top;
      throw SolverError(msg.str());
    }
    Window w = default_window(problem, mode, config);
    w.hi = top;
    add(find_eigenvalues(problem, mode, w, static_cast<std::size_t>(below), config), mode);
  }

  const double top = cutoff();
  std::erase_if(spec.entries, [&](const SpectrumEntry& e) { return e.lambda > top; });
  return spec;
}

// ---- diagnostics -------------------------------------------------------------

BoundaryResiduals boundary_residuals(const RobinProblem& problem, const Eigenpair& pair) {
  const auto& prof = pair.profile;
  const double a = problem.alpha();
  BoundaryResiduals r;
  r.outer = std::fabs(prof.slope.back() - a * prof.value.back());
  if (!problem.domain().is_ball()) r.inner = std::fabs(-prof.slope.front() - a * prof.value.front());
  return r;
}

double simpson(const std::vector<double>& x, const std::vector<double>& f) {
  const std::size_t n = x.size();
  if (n < 3 || n % 2 == 0 || f.size() != n)
    throw std::invalid_argument("simpson: need an odd number (>= 3) of uniform samples");
  const double h = (x.back() - x.front()) / static_cast<double>(n - 1);
  double s = f.front() + f.back();
  for (std::size_t i = 1; i + 1 < n; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  return s * h / 3.0;
}

double profile_mass(const RobinProblem& problem, const Eigenpair& pair) {
  const int d = problem.domain().dimension();
  const auto& prof = pair.profile;
  std::vector<double> f(prof.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    f[i] = prof.value[i] * prof.value[i] * ipow(prof.radius[i], d - 1);
  return unit_sphere_area(d) * simpson(prof.radius, f);
}

double rayleigh_quotient(const RobinProblem& problem, const Eigenpair& pair) {
  const auto& domain = problem.domain();
  const int d = domain.dimension();
  const auto& prof = pair.profile;
  const double angular = centrifugal(domain, pair.mode);
  std::vector<double> grad(prof.size()), mass(prof.size());
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const double r = prof.radius[i];
    const double v = prof.value[i];
    const double s = prof.slope[i];
    grad[i] = s * s * ipow(r, d - 1);
    if (angular > 0.0 && r > 0.0) grad[i] += angular * v * v * std::pow(r, d - 3);
    mass[i] = v * v * ipow(r, d - 1);
  }
  const double S = unit_sphere_area(d);
  double boundary = ipow(domain.outer_radius(), d - 1) * prof.value.back() * prof.value.back();
  if (!domain.is_ball())
    boundary += ipow(domain.inner_radius(), d - 1) * prof.value.front() * prof.value.front();
  return (S * simpson(prof.radius, grad) - problem.alpha() * S * boundary) /
         (S * simpson(prof.radius, mass));
}

int interior_sign_changes(const RadialProfile& profile) {
  int changes = 0;
  int last = 0;
  for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
    const double v = profile.value[i];
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace robin
