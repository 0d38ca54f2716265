#pragma once

// Robin spectrum of -Δu = λu, ∂u/∂ν = αu on balls and annuli.
//
// Separation of variables reduces each angular sector ell to the radial
// Sturm-Liouville problem
//
//   φ'' + (d-1)/ρ φ' + (λ - ell(ell+d-2)/ρ²) φ = 0,
//   -φ'(r1) - αφ(r1) = 0 (annulus only),   φ'(R) - αφ(R) = 0.
//
// Two independent engines solve it:
//   * shooting: adaptive Runge-Kutta from the inner endpoint (or from a
//     regular series start near the centre of a ball), with eigenvalues
//     located as roots of the outer Robin residual F(λ) and counted by the
//     oscillation number of the shot solution;
//   * Bessel: on the λ = -k² < 0 branch the radial solutions are
//     ρ^{-p}[C1 K_ν(kρ) + C2 I_ν(kρ)], p = (d-2)/2, ν = ell + p, and
//     eigenvalues are zeros of the 2x2 boundary determinant in k.

#include <cstddef>
#include <optional>
#include <vector>

#include "robin/domain.hpp"
#include "robin/errors.hpp"
#include "robin/numerics.hpp"
#include "robin/ode.hpp"

namespace robin {

struct SolverConfig {
  OdeTolerances ode{};
  std::size_t scan_points = 400;
  std::size_t bessel_scan_points = 1000;
  // Uniform sample count of returned profiles; odd so Simpson's rule applies.
  std::size_t profile_points = 1601;
  // A ball's shot starts at ρ0 = ball_start * r.
  double ball_start = 1e-6;
  RootOptions root{};
};

/// Uniformly sampled radial profile. For a ball the first sample is ρ = 0.
struct RadialProfile {
  std::vector<double> radius;
  std::vector<double> value;
  std::vector<double> slope;

  double front_value() const { return value.front(); }
  double back_value() const { return value.back(); }
  std::size_t size() const { return radius.size(); }
};

struct Eigenpair {
  ModeSpec mode;
  int n = 0;            // radial index, n >= 1
  double lambda = 0;
  double k = 0;         // sqrt(-λ) when λ < 0, else 0
  RadialProfile profile;  // normalized so that ∫_Ω φ(|x|)² dx = 1
  // Bessel coefficients; only set by the Bessel engine.
  std::optional<double> c1;
  std::optional<double> c2;
};

struct Window {
  double lo;
  double hi;
};

struct EigenSearch {
  std::vector<Eigenpair> pairs;  // ascending
  // Set when max_count was reached before the window was exhausted.
  bool truncated = false;
  // Eigenvalues of this mode at or below window.lo (not returned).
  int skipped_below = 0;
};

struct ShotResult {
  double residual = 0;    // F(λ) = φ'(R) - αφ(R)
  double value = 0;       // φ(R)
  double slope = 0;       // φ'(R)
  int interior_zeros = 0;
};

// ---- shooting engine -------------------------------------------------------

/// Outer Robin residual F(λ) of the solution launched from the inner
/// condition: φ(r1) = 1, φ'(r1) = -α on an annulus, φ ≈ ρ^ell(1 - λρ²/(2(2ell+d)))
/// at ρ0 on a ball.
double shoot(const RobinProblem& problem, const ModeSpec& mode, double lambda,
             const SolverConfig& config = {});
ShotResult shoot_detailed(const RobinProblem& problem, const ModeSpec& mode, double lambda,
                          const SolverConfig& config = {});

/// Number of eigenvalues of this mode that are <= lambda.
int eigenvalue_count(const RobinProblem& problem, const ModeSpec& mode, double lambda,
                     const SolverConfig& config = {});

/// -(α + max(1, d-1)/s)² - 10, where s is the ball radius, or for an annulus
/// the smaller of r1 and half the width. Used as the bottom of eigenvalue
/// searches by both engines.
double window_floor(const RobinProblem& problem);

/// A window [lo, 0) whose lower end lies below the first eigenvalue of the
/// mode: lo = window_floor, pushed further down until the oscillation count
/// at lo is zero.
Window default_window(const RobinProblem& problem, const ModeSpec& mode,
                      const SolverConfig& config = {});

EigenSearch find_eigenvalues(const RobinProblem& problem, const ModeSpec& mode, Window window,
                             std::size_t max_count, const SolverConfig& config = {});

/// First eigenpair of a mode from the shooting engine.
Eigenpair first_eigenpair(const RobinProblem& problem, const ModeSpec& mode = {},
                          const SolverConfig& config = {});

/// The `count` lowest eigenpairs of a mode, n = 1..count.
std::vector<Eigenpair> lowest_eigenpairs(const RobinProblem& problem, const ModeSpec& mode,
                                         std::size_t count, const SolverConfig& config = {});

/// Normalized profile of the shot solution at a given eigenvalue.
Eigenpair shooting_eigenpair(const RobinProblem& problem, const ModeSpec& mode, double lambda,
                             const SolverConfig& config = {});

// ---- Bessel engine ---------------------------------------------------------

/// Characteristic function on the λ = -k² branch. Annulus: determinant of the
/// column- and row-normalized 2x2 Robin system. Ball: the single Robin
/// condition on the regular solution, divided by I_ν(kR).
double characteristic_det(const RobinProblem& problem, const ModeSpec& mode, double k);

/// Same for the exact λ = 0 power solutions ρ^ell and ρ^{-(ell+d-2)} (log ρ
/// for ell = 0, d = 2). Ball: ell/R - α.
double characteristic_det_zero(const RobinProblem& problem, const ModeSpec& mode);

/// Lowest eigenvalue of the mode on the λ < 0 branch: the largest root k of
/// characteristic_det, with C1, C2 from the null vector. Throws SolverError
/// when the determinant has no sign change on the scanned range.
Eigenpair eigenvalue_bessel(const RobinProblem& problem, const ModeSpec& mode = {},
                            const SolverConfig& config = {});

/// φ and φ' of a Bessel eigenpair at an arbitrary radius, same normalization
/// as its profile.
struct PointValue {
  double value;
  double slope;
};
PointValue bessel_profile_at(const RobinProblem& problem, const Eigenpair& pair, double rho);

// ---- spectrum --------------------------------------------------------------

struct SpectrumEntry {
  double lambda;
  long multiplicity;
  int ell;
  int n;
};

struct Spectrum {
  std::vector<SpectrumEntry> entries;  // ascending in λ
  std::size_t count = 0;

  /// λ_1 <= λ_2 <= ... <= λ_count with multiplicity.
  std::vector<double> values() const;
};

/// First `count` eigenvalues, with multiplicity, over ell in [0, L_max].
/// Throws SolverError if mode L_max + 1 still has an eigenvalue at or below
/// the count-th one.
Spectrum assemble_spectrum(const RobinProblem& problem, int max_ell, std::size_t count,
                           const SolverConfig& config = {});

// ---- diagnostics -----------------------------------------------------------

struct BoundaryResiduals {
  double inner = 0;  // |-φ'(r1) - αφ(r1)|; 0 for a ball
  double outer = 0;  // |φ'(R) - αφ(R)|
};
BoundaryResiduals boundary_residuals(const RobinProblem& problem, const Eigenpair& pair);

/// ∫_Ω φ² dx by Simpson's rule on the profile.
double profile_mass(const RobinProblem& problem, const Eigenpair& pair);

/// Rayleigh quotient (∫|∇u|² - α∫_∂Ω u²) / ∫u² of u = φ(|x|)Y_ell, by
/// Simpson's rule on the profile.
double rayleigh_quotient(const RobinProblem& problem, const Eigenpair& pair);

/// Sign changes of the sampled profile in the open interval.
int interior_sign_changes(const RadialProfile& profile);

/// Composite Simpson's rule on a uniform grid with an odd number of samples.
double simpson(const std::vector<double>& x, const std::vector<double>& f);

}  // namespace robin
