#pragma once

// Radial domains (balls and annuli centred at the origin of R^d) and the
// Robin problem posed on them.

#include <string>
#include <variant>

namespace robin {

struct Ball {
  double radius;
};

struct Annulus {
  double inner;
  double outer;
};

struct Measures {
  double volume;
  double surface;
};

/// omega_d, the volume of the unit ball in R^d.
double unit_ball_volume(int dim);
/// d * omega_d, the area of the unit sphere in R^d.
double unit_sphere_area(int dim);

class DomainSpec {
 public:
  static DomainSpec ball(int dim, double radius);
  static DomainSpec annulus(int dim, double inner, double outer);

  int dimension() const { return dim_; }
  bool is_ball() const { return std::holds_alternative<Ball>(shape_); }
  const std::variant<Ball, Annulus>& shape() const { return shape_; }

  /// 0 for a ball.
  double inner_radius() const;
  double outer_radius() const;

  std::string describe() const;

 private:
  DomainSpec(int dim, std::variant<Ball, Annulus> shape) : dim_(dim), shape_(shape) {}
  int dim_;
  std::variant<Ball, Annulus> shape_;
};

Measures measures(const DomainSpec& domain);

/// Radius of the ball with the same d-volume.
double equal_volume_radius(int dim, double volume);

class RobinProblem {
 public:
  RobinProblem(DomainSpec domain, double alpha);

  const DomainSpec& domain() const { return domain_; }
  double alpha() const { return alpha_; }

 private:
  DomainSpec domain_;
  double alpha_;
};

/// Angular sector of the separated Laplacian: spherical harmonics of degree ell.
struct ModeSpec {
  int ell = 0;
  double effective_order = 0;  // ell + (d - 2) / 2
  long multiplicity = 1;       // dimension of the degree-ell harmonic space

  static ModeSpec make(int dim, int ell);
};

/// Dimension of the space of degree-ell spherical harmonics on S^{d-1}.
long harmonic_multiplicity(int dim, int ell);

}  // namespace robin
