#include "robin/theorems.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "robin/errors.hpp"
#include "robin/numerics.hpp"
#include "robin/shape.hpp"

namespace robin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string label(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return true;
}

void require_grid(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) throw std::invalid_argument(std::string(what) + " must not be empty");
  if (!strictly_increasing(grid))
    throw std::invalid_argument(std::string(what) + " must be strictly increasing");
}

double lambda1(const RobinProblem& problem, const SolverConfig& config) {
  return first_eigenpair(problem, {}, config).lambda;
}

// Runs body; a SolverError marks the report failed instead of escaping.
template <class Body>
void guarded(VerificationReport& report, Body&& body) {
  try {
    body();
  } catch (const SolverError& e) {
    report.fail(e.what());
  }
}

}  // namespace

void VerificationReport::add(std::string name, double sub_margin) {
  subchecks.push_back({std::move(name), sub_margin, sub_margin > 0.0});
}

void VerificationReport::finalize() {
  margin = kInf;
  for (const auto& s : subchecks) margin = std::min(margin, s.margin);
  if (std::isnan(margin) || subchecks.empty()) margin = -kInf;
  passed = !solver_failure && margin > 0.0;
  for (const auto& s : subchecks)
    if (!s.passed) passed = false;
}

void VerificationReport::fail(const std::string& what) {
  solver_failure = true;
  diagnostics.push_back(what);
}

// ---- λ1 monotonicity -----------------------------------------------------------

VerificationReport verify_theorem1(double r1, const std::vector<double>& alphas,
                                   const std::vector<double>& r2_grid, double fd_step,
                                   double fd_tolerance, const SolverConfig& config) {
  require_grid(alphas, "alpha list");
  require_grid(r2_grid, "r2 grid");
  if (!(r2_grid.front() > r1)) throw std::invalid_argument("r2 grid must lie above r1");
  VerificationReport rep;
  rep.check_name = "theorem1";
  rep.claim = "lambda1(A_{r1,r2}) strictly increasing in r2 and dlambda1(A, V_outer) > 0";
  rep.parameters = {{"r1", {r1}}, {"alpha", alphas}, {"r2", r2_grid}, {"fd_step", {fd_step}},
                    {"fd_tolerance", {fd_tolerance}}};
  guarded(rep, [&] {
    for (double alpha : alphas) {
      Table t{"theorem1_alpha_" + label(alpha), {"r2", "lambda1", "hadamard_outer"}, {}};
      double rise = kInf, slope = kInf, worst_rel = 0.0;
      double prev = -kInf;
      for (double r2 : r2_grid) {
        const RobinProblem problem(DomainSpec::annulus(2, r1, r2), alpha);
        const Eigenpair first = first_eigenpair(problem, {}, config);
        const double dl = hadamard_derivative(problem, first, BoundaryField::outer_normal());
        const auto fd = derivative_report(problem, BoundaryField::outer_normal(), fd_step, config);
        if (prev > -kInf) rise = std::min(rise, first.lambda - prev);
        prev = first.lambda;
        slope = std::min(slope, dl);
        worst_rel = std::max(worst_rel, relative_discrepancy(dl, fd.fd_value));
        t.rows.push_back({r2, first.lambda, dl});
      }
      const std::string tag = " alpha=" + label(alpha);
      if (r2_grid.size() > 1) rep.add("monotone" + tag, rise);
      rep.add("derivative_positive" + tag, slope);
      rep.add("derivative_matches_fd" + tag, fd_tolerance - worst_rel);
      rep.tables.push_back(std::move(t));
    }
  });
  rep.finalize();
  return rep;
}

VerificationReport verify_riccati(double r1, const std::vector<double>& alphas,
                                  const std::vector<double>& r2_grid, double tol,
                                  const SolverConfig& config) {
  require_grid(alphas, "alpha list");
  require_grid(r2_grid, "r2 grid");
  if (!(r2_grid.front() > r1)) throw std::invalid_argument("r2 grid must lie above r1");
  VerificationReport rep;
  rep.check_name = "riccati";
  rep.claim = "z(r1) = -alpha, z(r2) = alpha, z' + z^2 + z/r + lambda1 = 0, xi < r2 with z'(xi) = -lambda1 > 0, z'(r2) > 0";
  rep.parameters = {{"r1", {r1}}, {"alpha", alphas}, {"r2", r2_grid}, {"tol", {tol}}};
  guarded(rep, [&] {
    Table t{"riccati", {"alpha", "r2", "lambda1", "xi", "slope_at_xi", "endpoint_slope", "max_residual"}, {}};
    double inner = kInf, outer = kInf, residual = kInf, xi_gap = kInf, xi_slope = kInf,
           positive = kInf, endpoint = kInf;
    for (double alpha : alphas) {
      for (double r2 : r2_grid) {
        const RobinProblem problem(DomainSpec::annulus(2, r1, r2), alpha);
        const Eigenpair first = first_eigenpair(problem, {}, config);
        const RiccatiTrace tr = riccati_trace(problem, first, kRiccatiSamples, config);
        inner = std::min(inner, tol - std::fabs(tr.z.front() + alpha));
        outer = std::min(outer, tol - std::fabs(tr.z.back() - alpha));
        residual = std::min(residual, tol - tr.max_residual);
        xi_gap = std::min(xi_gap, r2 - tr.xi);
        xi_slope = std::min(xi_slope, 1e-6 * std::fabs(tr.lambda) - std::fabs(tr.slope_at_xi + tr.lambda));
        positive = std::min(positive, -tr.lambda);
        endpoint = std::min({endpoint, tr.endpoint_slope, tr.endpoint_slope_fd});
        t.rows.push_back({alpha, r2, tr.lambda, tr.xi, tr.slope_at_xi, tr.endpoint_slope, tr.max_residual});
      }
    }
    rep.add("inner_boundary_value", inner);
    rep.add("outer_boundary_value", outer);
    rep.add("riccati_residual", residual);
    rep.add("xi_below_r2", xi_gap);
    rep.add("slope_at_xi_equals_minus_lambda", xi_slope);
    rep.add("minus_lambda_positive", positive);
    rep.add("endpoint_slope_positive", endpoint);
    rep.tables.push_back(std::move(t));
  });
  rep.finalize();
  return rep;
}

// ---- boundary-to-volume bound --------------------------------------------------

double negativity_bound(const RobinProblem& problem) {
  const Measures m = measures(problem.domain());
  return -problem.alpha() * m.surface / m.volume;
}

VerificationReport verify_negativity_bound(const std::vector<RobinProblem>& problems,
                                           const SolverConfig& config) {
  VerificationReport rep;
  rep.check_name = "negativity_bound";
  rep.claim = "lambda1(Omega) < -alpha sigma(dOmega) / |Omega|";
  std::vector<double> dims, r1s, r2s, alphas;
  for (const auto& p : problems) {
    dims.push_back(p.domain().dimension());
    r1s.push_back(p.domain().inner_radius());
    r2s.push_back(p.domain().outer_radius());
    alphas.push_back(p.alpha());
  }
  rep.parameters = {{"dim", dims}, {"r1", r1s}, {"r2", r2s}, {"alpha", alphas}};
  guarded(rep, [&] {
    Table t{"bound", {"dim", "r1", "r2", "alpha", "lambda1", "bound", "slack"}, {}};
    double worst = kInf;
    for (const auto& p : problems) {
      const double l = lambda1(p, config);
      const double b = negativity_bound(p);
      worst = std::min(worst, b - l);
      t.rows.push_back({static_cast<double>(p.domain().dimension()), p.domain().inner_radius(),
                        p.domain().outer_radius(), p.alpha(), l, b, b - l});
    }
    rep.add("slack_positive", worst);
    rep.tables.push_back(std::move(t));
  });
  rep.finalize();
  return rep;
}

// ---- large-α expansion ---------------------------------------------------------

double asymptotic_remainder(double lambda1, double alpha, double outer_radius) {
  return (lambda1 + alpha * alpha + alpha / outer_radius) / alpha;
}

VerificationReport verify_asymptotics(const DomainSpec& domain, const std::vector<double>& alpha_grid,
                                      double shrink_factor, const SolverConfig& config) {
  require_grid(alpha_grid, "alpha grid");
  if (!(shrink_factor >= 1.0)) throw std::invalid_argument("shrink factor must be >= 1");
  // The remainder decays like 1/α, so a smaller span cannot show the shrink.
  if (!(alpha_grid.back() >= shrink_factor * alpha_grid.front()))
    throw std::invalid_argument("alpha grid must span at least the shrink factor");
  VerificationReport rep;
  const std::string kind = domain.is_ball() ? "ball" : "annulus";
  rep.check_name = "asymptotics_" + kind;
  rep.claim = "|(lambda1 + alpha^2 + alpha/R)/alpha| decreases along alpha";
  rep.parameters = {{"dim", {static_cast<double>(domain.dimension())}},
                    {"r1", {domain.inner_radius()}},
                    {"r2", {domain.outer_radius()}},
                    {"alpha", alpha_grid},
                    {"shrink_factor", {shrink_factor}}};
  guarded(rep, [&] {
    Table t{"asymptotics_" + kind, {"alpha", "lambda1", "remainder"}, {}};
    std::vector<double> rem;
    for (double alpha : alpha_grid) {
      const double l = lambda1(RobinProblem(domain, alpha), config);
      rem.push_back(asymptotic_remainder(l, alpha, domain.outer_radius()));
      t.rows.push_back({alpha, l, rem.back()});
    }
    double drop = kInf;
    for (std::size_t i = 1; i < rem.size(); ++i)
      drop = std::min(drop, std::fabs(rem[i - 1]) - std::fabs(rem[i]));
    rep.add("remainder_decreasing", drop);
    rep.add("remainder_shrinks", std::fabs(rem.front()) / shrink_factor - std::fabs(rem.back()));
    rep.tables.push_back(std::move(t));
  });
  rep.finalize();
  return rep;
}

// ---- annulus against the ball ----------------------------------------------------

VerificationReport crossing_search(double volume, double r1, double alpha_lo, double alpha_hi,
                                   const CrossingOptions& options, const SolverConfig& config) {
  if (!(volume > 0.0 && r1 > 0.0)) throw std::invalid_argument("volume and r1 must be positive");
  if (!(0.0 < alpha_lo && alpha_lo < alpha_hi)) throw std::invalid_argument("need 0 < alpha_lo < alpha_hi");
  if (options.scan_points < 2) throw std::invalid_argument("crossing scan needs at least 2 points");
  const double r = equal_volume_radius(2, volume);
  const double r2 = std::sqrt(r1 * r1 + r * r);
  const auto annulus = DomainSpec::annulus(2, r1, r2);
  const auto ball = DomainSpec::ball(2, r);

  VerificationReport rep;
  rep.check_name = "crossing";
  rep.claim = "lambda1(annulus) - lambda1(ball) changes sign at alpha*, annulus larger above it";
  rep.parameters = {{"volume", {volume}}, {"r1", {r1}}, {"r2", {r2}}, {"r", {r}},
                    {"alpha_window", {alpha_lo, alpha_hi}}};
  guarded(rep, [&] {
    struct Row {
      double alpha, la, lb;
    };
    auto eval = [&](double a) {
      return Row{a, lambda1(RobinProblem(annulus, a), config), lambda1(RobinProblem(ball, a), config)};
    };
    std::vector<Row> rows;
    const double ratio = std::log(alpha_hi / alpha_lo);
    for (std::size_t i = 0; i < options.scan_points; ++i) {
      const double a = i + 1 == options.scan_points
                           ? alpha_hi
                           : alpha_lo * std::exp(ratio * static_cast<double>(i) /
                                                 static_cast<double>(options.scan_points - 1));
      rows.push_back(eval(a));
    }
    // First change from gap <= 0 to gap > 0.
    std::size_t j = rows.size();
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      if (rows[i].la - rows[i].lb <= 0.0 && rows[i + 1].la - rows[i + 1].lb > 0.0) {
        j = i;
        break;
      }
    }
    if (j == rows.size()) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "no crossing in window: gap(" << rows.front().alpha << ") = " << rows.front().la - rows.front().lb
          << ", gap(" << rows.back().alpha << ") = " << rows.back().la - rows.back().lb;
      rep.diagnostics.push_back(msg.str());
      rep.add("crossing_found", -kInf);
    } else {
      auto gap = [&](double a) {
        const Row x = eval(a);
        return x.la - x.lb;
      };
      RootOptions opt = config.root;
      opt.abs_tol = 0.01 * options.alpha_tol;
      const double star = brent(gap, rows[j].alpha, rows[j + 1].alpha, rows[j].la - rows[j].lb,
                                rows[j + 1].la - rows[j + 1].lb, opt);
      const Row at = eval(star);
      const double half = 0.5 * options.alpha_tol;
      rep.parameters.push_back({"alpha_star", {star}});
      rep.add("gap_at_alpha_star", options.gap_tol - std::fabs(at.la - at.lb));
      rep.add("bracket_below", -gap(star - half));
      rep.add("bracket_above", gap(star + half));
      double above = kInf;
      for (std::size_t i = j + 1; i < rows.size(); ++i) above = std::min(above, rows[i].la - rows[i].lb);
      rep.add("annulus_larger_above", above);
      rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(j + 1), at);
    }
    Table t{"crossing", {"alpha", "lambda_annulus", "lambda_ball", "gap"}, {}};
    for (const auto& x : rows) t.rows.push_back({x.alpha, x.la, x.lb, x.la - x.lb});
    rep.tables.push_back(std::move(t));
  });
  rep.finalize();
  return rep;
}

// ---- pinching ----------------------------------------------------------------------

double pinch_quotient(int dim, double r, double alpha, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < r)) throw std::invalid_argument("pinch: need 0 < epsilon < r");
  const RobinProblem ball(DomainSpec::ball(dim, r), alpha);
  const Eigenpair u = eigenvalue_bessel(ball);
  const double rp = std::pow(std::pow(r, dim) + std::pow(epsilon, dim), 1.0 / dim);
  const auto grad = [&](double rho) {
    const double s = bessel_profile_at(ball, u, rho).slope;
    return s * s * std::pow(rho, dim - 1);
  };
  const auto mass = [&](double rho) {
    const double v = bessel_profile_at(ball, u, rho).value;
    return v * v * std::pow(rho, dim - 1);
  };
  const double phi_r = bessel_profile_at(ball, u, r).value;
  const double phi_e = bessel_profile_at(ball, u, epsilon).value;
  // The common factor d·ω_d of every term cancels.
  const double num = integrate_gl(grad, epsilon, r) -
                     alpha * (std::pow(rp, dim - 1) * phi_r * phi_r + std::pow(epsilon, dim - 1) * phi_e * phi_e);
  const double den = integrate_gl(mass, epsilon, r) + phi_r * phi_r * (std::pow(rp, dim) - std::pow(r, dim)) / dim;
  return num / den;
}

VerificationReport pinch_check(int dim, double r, double alpha, const std::vector<double>& epsilons,
                               const SolverConfig& config) {
  if (epsilons.empty()) throw std::invalid_argument("epsilon grid must not be empty");
  for (double e : epsilons)
    if (!(e > 0.0 && e < r)) throw std::invalid_argument("pinch: need 0 < epsilon < r");
  VerificationReport rep;
  rep.check_name = "pinch";
  rep.claim = "lambda1(A_{eps,r'}) < lambda1(B_r) and Q(w) >= lambda1(A_{eps,r'})";
  rep.parameters = {{"dim", {static_cast<double>(dim)}}, {"r", {r}}, {"alpha", {alpha}}, {"epsilon", epsilons}};
  guarded(rep, [&] {
    const double lb = lambda1(RobinProblem(DomainSpec::ball(dim, r), alpha), config);
    Table t{"pinch", {"epsilon", "lambda_annulus", "lambda_ball", "rayleigh_bound_w"}, {}};
    double below = kInf, bound = kInf;
    for (double eps : epsilons) {
      const double rp = std::pow(std::pow(r, dim) + std::pow(eps, dim), 1.0 / dim);
      const double la = lambda1(RobinProblem(DomainSpec::annulus(dim, eps, rp), alpha), config);
      const double q = pinch_quotient(dim, r, alpha, eps);
      if (eps >= kMinPinchRatio * r) {
        below = std::min(below, lb - la);
      } else {
        rep.diagnostics.push_back("epsilon=" + label(eps) +
                                  ": below the resolvable inner radius, direct comparison skipped");
      }
      bound = std::min(bound, q - la + 1e-10);
      t.rows.push_back({eps, la, lb, q});
    }
    if (below < kInf) rep.add("annulus_below_ball", below);
    rep.add("w_quotient_upper_bound", bound);
    rep.tables.push_back(std::move(t));
  });
  rep.finalize();
  return rep;
}

// ---- Steklov and the second eigenvalue ------------------------------------------

SteklovRecord steklov_ball(int dim, double r) {
  if (dim < 2) throw std::invalid_argument("steklov_ball: dimension must be >= 2");
  if (!(r > 0.0 && std::isfinite(r))) throw std::invalid_argument("steklov_ball: radius must be positive");
  SteklovRecord rec;
  rec.dim = dim;
  rec.radius = r;
  rec.eigenvalues.assign(static_cast<std::size_t>(dim) + 1, 1.0 / r);
  rec.eigenvalues[0] = 0.0;

  // Eigenfunction i: the constant for i = 0, the coordinate x_{i-1} otherwise.
  auto u = [](std::size_t i, const std::vector<double>& x) { return i == 0 ? 1.0 : x[i - 1]; };
  const double h = 1e-3 * r;
  // Boundary samples: ±r e_j and r(1,...,1)/sqrt(d).
  std::vector<std::vector<double>> pts;
  for (int j = 0; j < dim; ++j)
    for (double s : {-1.0, 1.0}) {
      std::vector<double> x(static_cast<std::size_t>(dim), 0.0);
      x[static_cast<std::size_t>(j)] = s * r;
      pts.push_back(x);
    }
  pts.emplace_back(static_cast<std::size_t>(dim), r / std::sqrt(static_cast<double>(dim)));

  for (std::size_t i = 0; i < rec.eigenvalues.size(); ++i) {
    for (const auto& x : pts) {
      // Normal derivative by a central difference along x/r.
      std::vector<double> xp = x, xm = x;
      for (std::size_t c = 0; c < x.size(); ++c) {
        xp[c] += h * x[c] / r;
        xm[c] -= h * x[c] / r;
      }
      const double dn = (u(i, xp) - u(i, xm)) / (2.0 * h);
      rec.boundary_residual = std::max(rec.boundary_residual, std::fabs(dn - rec.eigenvalues[i] * u(i, x)));
      // Five-point Laplacian at the half-radius point.
      std::vector<double> y(x.size());
      for (std::size_t c = 0; c < x.size(); ++c) y[c] = 0.5 * x[c];
      double lap = 0.0;
      for (std::size_t c = 0; c < y.size(); ++c) {
        std::vector<double> yp = y, ym = y;
        yp[c] += h;
        ym[c] -= h;
        lap += (u(i, yp) - 2.0 * u(i, y) + u(i, ym)) / (h * h);
      }
      rec.laplacian_residual = std::max(rec.laplacian_residual, std::fabs(lap));
    }
  }
  return rec;
}

SecondMoments second_moments(int dim, double r1, double r2) {
  if (!(r1 >= 0.0 && r2 > r1)) throw std::invalid_argument("second_moments: need 0 <= r1 < r2");
  const double s = unit_sphere_area(dim);
  return {s * (std::pow(r2, dim + 1) + std::pow(r1, dim + 1)),
          s * (std::pow(r2, dim + 2) - std::pow(r1, dim + 2)) / (dim + 2)};
}

double theorem2_bound(int dim, double r1, double r2, double shift) {
  const double w = unit_ball_volume(dim);
  const double volume = w * (std::pow(r2, dim) - std::pow(r1, dim));
  const double surface = dim * w * (std::pow(r2, dim - 1) + std::pow(r1, dim - 1));
  const double r = equal_volume_radius(dim, volume);
  const SecondMoments m = second_moments(dim, r1, r2);
  // The cross terms 2a·∫x vanish on centred radial domains.
  const double a2 = shift * shift;
  return (dim * volume - (m.boundary + a2 * surface) / r) / (m.volume + a2 * volume);
}

VerificationReport verify_theorem2_radial(int dim, double volume, const std::vector<double>& inner_radii,
                                          double tol, const SolverConfig& config) {
  const double r = equal_volume_radius(dim, volume);
  const double alpha = 1.0 / r;
  VerificationReport rep;
  rep.check_name = "theorem2_d" + std::to_string(dim);
  rep.claim = "alpha = 1/r: lambda2(B_r) = 0 with multiplicity d, lambda2(A) <= bound(A) <= 0";
  rep.parameters = {{"dim", {static_cast<double>(dim)}}, {"volume", {volume}}, {"r", {r}},
                    {"alpha", {alpha}}, {"r1", inner_radii}, {"tol", {tol}}};
  for (double r1 : inner_radii)
    if (!(r1 > 0.0)) throw std::invalid_argument("inner radii must be positive");

  const SteklovRecord st = steklov_ball(dim, r);
  rep.add("steklov_ball_residual", tol - std::max(st.boundary_residual, st.laplacian_residual));

  guarded(rep, [&] {
    Table t{rep.check_name, {"r1", "r2", "lambda2", "test_function_bound"}, {}};
    const auto ball = assemble_spectrum(RobinProblem(DomainSpec::ball(dim, r), alpha), 3,
                                        static_cast<std::size_t>(dim) + 2, config)
                          .values();
    double zero = kInf;
    for (int i = 1; i <= dim; ++i) zero = std::min(zero, tol - std::fabs(ball[static_cast<std::size_t>(i)]));
    rep.add("ball_lambda2_zero", zero);
    rep.add("ball_zero_multiplicity", ball.back() - tol);
    rep.add("ball_lambda1_negative", -ball.front());
    t.rows.push_back({0.0, r, ball[1], theorem2_bound(dim, 0.0, r)});

    const double ball_boundary_moment = second_moments(dim, 0.0, r).boundary;
    double below = kInf, nonpositive = kInf, iso = kInf;
    for (double r1 : inner_radii) {
      const double r2 = std::pow(std::pow(r, dim) + std::pow(r1, dim), 1.0 / dim);
      const RobinProblem annulus(DomainSpec::annulus(dim, r1, r2), alpha);
      const double l2 = assemble_spectrum(annulus, 4, 2, config).values()[1];
      const double b = theorem2_bound(dim, r1, r2);
      below = std::min(below, b - l2 + tol);
      nonpositive = std::min(nonpositive, tol - b);
      iso = std::min(iso, second_moments(dim, r1, r2).boundary - ball_boundary_moment);
      t.rows.push_back({r1, r2, l2, b});
    }
    if (!inner_radii.empty()) {
      rep.add("lambda2_below_bound", below);
      rep.add("bound_nonpositive", nonpositive);
      rep.add("boundary_moment_exceeds_ball", iso);
    }
    rep.tables.push_back(std::move(t));
  });
  rep.finalize();
  return rep;
}

}  // namespace robin
