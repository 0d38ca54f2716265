#pragma once

// Named numerical verifications of the spectral claims on radial domains.
//
// Every report carries a signed margin with one convention throughout:
// margin > 0 exactly when the claim holds, tolerances already folded in. A
// report combining several sub-claims takes the smallest sub-margin.

#include <string>
#include <utility>
#include <vector>

#include "robin/domain.hpp"
#include "robin/radial.hpp"

namespace robin {

/// A plot-ready table; one CSV file per table.
struct Table {
  std::string name;  // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct SubCheck {
  std::string name;
  double margin = 0;
  bool passed = false;
};

struct VerificationReport {
  std::string check_name;
  // Swept configuration, in insertion order.
  std::vector<std::pair<std::string, std::vector<double>>> parameters;
  std::string claim;
  double margin = 0;
  bool passed = false;
  std::vector<std::string> artifacts;  // filled in when tables are written
  std::vector<Table> tables;
  std::vector<SubCheck> subchecks;
  std::vector<std::string> diagnostics;
  bool solver_failure = false;

  void add(std::string name, double sub_margin);
  /// Folds the sub-checks into margin and passed.
  void finalize();
  /// Marks the report failed after a propagated solver error.
  void fail(const std::string& what);
};

// ---- λ1 monotonicity in the outer radius -------------------------------------

/// For each α: λ1 strictly increasing along r2_grid, outer-field Hadamard
/// derivative strictly positive, and the derivative matching central
/// differences with step fd_step to relative fd_tolerance. A grid of length
/// one passes monotonicity vacuously.
VerificationReport verify_theorem1(double r1, const std::vector<double>& alphas,
                                   const std::vector<double>& r2_grid, double fd_step = 1e-4,
                                   double fd_tolerance = 1e-4, const SolverConfig& config = {});

/// Riccati mechanics of the first eigenfunction on the same grid: boundary
/// values of z within tol, uniform residual within tol, ξ < r2 with
/// dz/dr(ξ) = -λ1 > 0, and dz/dr(r2) > 0.
VerificationReport verify_riccati(double r1, const std::vector<double>& alphas,
                                  const std::vector<double>& r2_grid, double tol = 1e-8,
                                  const SolverConfig& config = {});

// ---- upper bound by the boundary-to-volume ratio -----------------------------

/// -α σ(∂Ω)/|Ω|.
double negativity_bound(const RobinProblem& problem);

/// λ1 < -α σ(∂Ω)/|Ω| for every problem.
VerificationReport verify_negativity_bound(const std::vector<RobinProblem>& problems,
                                           const SolverConfig& config = {});

// ---- large-α expansion --------------------------------------------------------

/// (λ1 + α² + α/R)/α with R the outer radius.
double asymptotic_remainder(double lambda1, double alpha, double outer_radius);

/// |remainder| strictly decreasing along the increasing alpha_grid and its
/// last value at most 1/shrink_factor of its first. The grid must span at
/// least the shrink factor.
VerificationReport verify_asymptotics(const DomainSpec& domain, const std::vector<double>& alpha_grid,
                                      double shrink_factor = 3.0, const SolverConfig& config = {});

// ---- annulus against the ball of equal volume --------------------------------

struct CrossingOptions {
  std::size_t scan_points = 48;  // geometric in α
  double gap_tol = 1e-8;
  double alpha_tol = 1e-6;
};

/// Sign change of λ1(annulus) - λ1(ball) in α for the 2D annulus with inner
/// radius r1 and the ball of the same volume. The annulus must win at every
/// scan point above the crossing.
VerificationReport crossing_search(double volume, double r1, double alpha_lo, double alpha_hi,
                                   const CrossingOptions& options = {},
                                   const SolverConfig& config = {});

// ---- pinching a small hole ----------------------------------------------------

/// Rayleigh quotient on A_{ε,r'} of the ball eigenfunction continued by its
/// boundary value on r < ρ < r', r' = (r^d + ε^d)^{1/d}.
double pinch_quotient(int dim, double r, double alpha, double epsilon);

/// Inner radii below this fraction of r skip the direct comparison.
inline constexpr double kMinPinchRatio = 1e-3;

/// Per ε: λ1(A_{ε,r'}) < λ1(B_r), and pinch_quotient ≥ λ1(A_{ε,r'}) - 1e-10.
VerificationReport pinch_check(int dim, double r, double alpha,
                               const std::vector<double>& epsilons, const SolverConfig& config = {});

// ---- Steklov eigenvalues of the ball and the second Robin eigenvalue ---------

struct SteklovRecord {
  int dim = 0;
  double radius = 0;
  std::vector<double> eigenvalues;  // p1 = 0, p2 = ... = p_{d+1} = 1/r
  // max |Δu| and max |∂u/∂ν - p u| over sampled boundary points, for the
  // constant and the coordinate functions.
  double laplacian_residual = 0;
  double boundary_residual = 0;
};

SteklovRecord steklov_ball(int dim, double r);

/// (d|Ω| - (1/r)∫_∂Ω |x+a|² dσ) / ∫_Ω |x+a|² dx for a centred annulus
/// (or ball, r1 = 0) with |a| = shift, r the equal-volume radius.
double theorem2_bound(int dim, double r1, double r2, double shift = 0.0);

/// ∫_∂Ω |x|² dσ and ∫_Ω |x|² dx in closed form.
struct SecondMoments {
  double boundary;
  double volume;
};
SecondMoments second_moments(int dim, double r1, double r2);

/// At α = 1/r, r the radius of the ball of the given volume: λ2(B_r) = 0
/// with multiplicity d, and λ2(A) ≤ theorem2_bound ≤ 0 for each inner radius
/// of the family, λ2 counted with multiplicity.
VerificationReport verify_theorem2_radial(int dim, double volume, const std::vector<double>& inner_radii,
                                          double tol = 1e-8, const SolverConfig& config = {});

}  // namespace robin
