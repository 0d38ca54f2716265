#pragma once

// First-order shape calculus of the first Robin eigenvalue on planar annuli.
//
// On a circle of radius ρ the normalized first eigenfunction is constant,
// and the Robin condition gives |∇u|² = α²u². The Hadamard integrand
// |∇u|² - λu² - 2α²u² - αHu² therefore reduces to φ(ρ)²(-λ - α² - αH) and
// every boundary integral is closed-form. Mean curvature is taken with respect
// to the outward normal of the annulus: H = 1/r2 outside, H = -1/r1 inside.

#include <vector>

#include "robin/domain.hpp"
#include "robin/radial.hpp"

namespace robin {

/// Normal velocity V·ν on each boundary circle (constant per circle).
class BoundaryField {
 public:
  enum class Kind { OuterNormal, VolumePreservingPair };

  /// ν on |x| = r2, 0 on |x| = r1.
  static BoundaryField outer_normal();
  /// Pair with outer_weight·2πr2 + inner_weight·2πr1 = 0; throws if the
  /// weights violate it beyond roundoff.
  static BoundaryField volume_preserving(const DomainSpec& domain, double outer_weight,
                                         double inner_weight);
  /// The pair with the given outer weight and the balancing inner weight.
  static BoundaryField volume_preserving(const DomainSpec& domain, double outer_weight);

  Kind kind() const { return kind_; }
  double outer_weight() const { return outer_; }
  double inner_weight() const { return inner_; }

 private:
  BoundaryField(Kind kind, double outer, double inner) : kind_(kind), outer_(outer), inner_(inner) {}
  Kind kind_;
  double outer_;
  double inner_;
};

/// dλ1(Ω, V) for the normalized first eigenpair of a 2D annulus.
double hadamard_derivative(const RobinProblem& problem, const Eigenpair& first,
                           const BoundaryField& field);

struct DerivativeReport {
  double hadamard_value = 0;
  double fd_value = 0;
  double fd_step = 0;
  double rel_discrepancy = 0;
};

/// Hadamard value next to the central difference of λ1 along the field:
/// r2 -> r2 + t·outer_weight, r1 -> r1 - t·inner_weight.
DerivativeReport derivative_report(const RobinProblem& problem, const BoundaryField& field,
                                   double fd_step, const SolverConfig& config = {});

double relative_discrepancy(double value, double reference);

/// φ²(r2)(k² - α² - α/r2) - φ²(r1)(k² - α² + α/r1) with k² = -λ1.
double stationarity_G(double r1, double r2, double alpha, const SolverConfig& config = {});
double stationarity_G(const RobinProblem& problem, const Eigenpair& first);

/// The closed-form dG/dr2 under the volume constraint r2² - r1² = C:
/// 2αφ²(r2)(k² - α² - α/r2 + 1/(2r2²)) + (2αφ²(r1) r2/r1)(k² - α² + α/r1 + 1/(2r1²)).
double dG_dr2_formula(double r1, double r2, double alpha, const SolverConfig& config = {});
double dG_dr2_formula(const RobinProblem& problem, const Eigenpair& first);

/// Central difference of G in r2 with r1 = sqrt(r2² - C) re-solved at each
/// point. Throws std::invalid_argument if h/r2 is outside [1e-7, 0.05].
double dG_dr2_fd(double r1, double r2, double alpha, double h, const SolverConfig& config = {});

inline constexpr double kMinRelativeFdStep = 1e-7;
inline constexpr double kMaxRelativeFdStep = 0.05;

/// α in [alpha_lo, alpha_hi] with G(r1, r2, α) = 0, by Brent's method.
/// Throws SolverError when G does not change sign on the interval.
double locate_stationary_alpha(double r1, double r2, double alpha_lo, double alpha_hi,
                               const SolverConfig& config = {});

struct CriticalAlpha {
  double alpha_c = 0;
  // False when dG/dr2 is positive on the whole scanned range; alpha_c is then
  // the lower end of the range.
  bool bracketed = false;
  std::vector<double> alphas;
  std::vector<double> values;
};

/// Smallest α beyond which the closed-form dG/dr2 stays positive on the
/// scan, refined by bisection.
CriticalAlpha locate_alpha_c(double r1, double r2, const std::vector<double>& alpha_grid,
                             const SolverConfig& config = {});

struct RiccatiTrace {
  std::vector<double> grid;
  std::vector<double> z;          // φ'/φ
  std::vector<double> dz;         // fourth-order finite differences of z
  double lambda = 0;
  double alpha = 0;
  double xi = 0;                  // sup{ρ : z(ρ) < 0}
  double slope_at_xi = 0;         // dz/dr at ξ from the differenced samples
  double endpoint_slope = 0;      // -(λ + α² + α/r2)
  double endpoint_slope_fd = 0;   // dz/dr(r2) from the differenced samples
  double max_residual = 0;        // max |dz/dr + z² + z/r + λ|
};

inline constexpr std::size_t kRiccatiSamples = 8001;

/// Riccati variable of the first eigenfunction of a 2D annulus, resampled on
/// `samples` uniform points by the engine that produced the pair (closed
/// form when it carries Bessel coefficients, otherwise a fresh shot). Throws
/// SolverError if φ vanishes on the grid.
RiccatiTrace riccati_trace(const RobinProblem& problem, const Eigenpair& first,
                           std::size_t samples = kRiccatiSamples, const SolverConfig& config = {});

}  // namespace robin
