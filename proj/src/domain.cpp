#include "robin/domain.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace robin {

namespace {

void check_dim(int dim) {
  if (dim < 2) throw std::invalid_argument("domain dimension must be >= 2");
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double unit_ball_volume(int dim) {
  check_dim(dim);
  return std::pow(std::numbers::pi, 0.5 * dim) / std::tgamma(1.0 + 0.5 * dim);
}

double unit_sphere_area(int dim) { return dim * unit_ball_volume(dim); }

DomainSpec DomainSpec::ball(int dim, double radius) {
  check_dim(dim);
  if (!positive_finite(radius)) throw std::invalid_argument("ball radius must be positive");
  return DomainSpec(dim, Ball{radius});
}

DomainSpec DomainSpec::annulus(int dim, double inner, double outer) {
  check_dim(dim);
  if (!positive_finite(inner) || !positive_finite(outer) || !(inner < outer))
    throw std::invalid_argument("annulus requires 0 < r1 < r2");
  return DomainSpec(dim, Annulus{inner, outer});
}

double DomainSpec::inner_radius() const {
  if (const auto* a = std::get_if<Annulus>(&shape_)) return a->inner;
  return 0.0;
}

double DomainSpec::outer_radius() const {
  if (const auto* a = std::get_if<Annulus>(&shape_)) return a->outer;
  return std::get<Ball>(shape_).radius;
}

std::string DomainSpec::describe() const {
  std::ostringstream out;
  out.precision(17);
  if (is_ball())
    out << "Ball{d=" << dim_ << ", r=" << outer_radius() << "}";
  else
    out << "Annulus{d=" << dim_ << ", r1=" << inner_radius() << ", r2=" << outer_radius() << "}";
  return out.str();
}

Measures measures(const DomainSpec& domain) {
  const int d = domain.dimension();
  const double w = unit_ball_volume(d);
  const double r2 = domain.outer_radius();
  const double r1 = domain.inner_radius();
  Measures m{w * std::pow(r2, d), d * w * std::pow(r2, d - 1)};
  if (!domain.is_ball()) {
    m.volume -= w * std::pow(r1, d);
    m.surface += d * w * std::pow(r1, d - 1);
  }
  return m;
}

double equal_volume_radius(int dim, double volume) {
  if (!positive_finite(volume)) throw std::invalid_argument("volume must be positive");
  return std::pow(volume / unit_ball_volume(dim), 1.0 / dim);
}

RobinProblem::RobinProblem(DomainSpec domain, double alpha) : domain_(domain), alpha_(alpha) {
  if (!positive_finite(alpha)) throw std::invalid_argument("Robin parameter alpha must be > 0");
}

long harmonic_multiplicity(int dim, int ell) {
  check_dim(dim);
  if (ell < 0) throw std::invalid_argument("angular index must be >= 0");
  if (ell == 0) return 1;
  if (dim == 2) return 2;
  return binomial(ell + dim - 1, dim - 1) - binomial(ell + dim - 3, dim - 1);
}

ModeSpec ModeSpec::make(int dim, int ell) {
  ModeSpec m;
  m.ell = ell;
  m.effective_order = ell + 0.5 * (dim - 2);
  m.multiplicity = harmonic_multiplicity(dim, ell);
  return m;
}

}  // namespace robin
