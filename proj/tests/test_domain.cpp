#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "robin/domain.hpp"

using robin::DomainSpec;

TEST_CASE("unit ball volumes") {
  CHECK(robin::unit_ball_volume(2) == doctest::Approx(std::numbers::pi));
  CHECK(robin::unit_ball_volume(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0));
  CHECK(robin::unit_ball_volume(4) == doctest::Approx(std::numbers::pi * std::numbers::pi / 2.0));
  CHECK(robin::unit_sphere_area(3) == doctest::Approx(4.0 * std::numbers::pi));
}

TEST_CASE("measures of balls and annuli") {
  const auto b = robin::measures(DomainSpec::ball(2, 1.0));
  CHECK(b.volume == doctest::Approx(std::numbers::pi));
  CHECK(b.surface == doctest::Approx(2.0 * std::numbers::pi));
  const auto a = robin::measures(DomainSpec::annulus(2, 1.0, 2.0));
  CHECK(a.volume == doctest::Approx(3.0 * std::numbers::pi));
  CHECK(a.surface == doctest::Approx(6.0 * std::numbers::pi));
  const auto s = robin::measures(DomainSpec::annulus(3, 1.0, 2.0));
  CHECK(s.volume == doctest::Approx(4.0 * std::numbers::pi / 3.0 * 7.0));
  CHECK(s.surface == doctest::Approx(4.0 * std::numbers::pi * 5.0));
}

TEST_CASE("equal-volume radius inverts the ball volume") {
  for (int d : {2, 3, 5}) {
    const double v = robin::measures(DomainSpec::ball(d, 1.7)).volume;
    CHECK(robin::equal_volume_radius(d, v) == doctest::Approx(1.7).epsilon(1e-14));
  }
  CHECK_THROWS_AS(robin::equal_volume_radius(2, -1.0), std::invalid_argument);
}

TEST_CASE("invalid domains and problems are rejected") {
  CHECK_THROWS_AS(DomainSpec::ball(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec::ball(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec::ball(2, INFINITY), std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec::annulus(2, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec::annulus(2, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec::annulus(2, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(robin::RobinProblem(DomainSpec::ball(2, 1.0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(robin::RobinProblem(DomainSpec::ball(2, 1.0), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(robin::RobinProblem(DomainSpec::ball(2, 1.0), NAN), std::invalid_argument);
}

TEST_CASE("accessors") {
  const auto a = DomainSpec::annulus(3, 0.5, 2.0);
  CHECK_FALSE(a.is_ball());
  CHECK(a.dimension() == 3);
  CHECK(a.inner_radius() == 0.5);
  CHECK(a.outer_radius() == 2.0);
  const auto b = DomainSpec::ball(2, 3.0);
  CHECK(b.is_ball());
  CHECK(b.inner_radius() == 0.0);
  CHECK(b.describe() == "Ball{d=2, r=3}");
  CHECK(a.describe() == "Annulus{d=3, r1=0.5, r2=2}");
}

TEST_CASE("spherical harmonic multiplicities") {
  CHECK(robin::harmonic_multiplicity(2, 0) == 1);
  CHECK(robin::harmonic_multiplicity(2, 5) == 2);
  // (ell+1)^2 harmonics of degree <= ell on S^2.
  for (int ell = 0; ell < 6; ++ell) CHECK(robin::harmonic_multiplicity(3, ell) == 2 * ell + 1);
  CHECK(robin::harmonic_multiplicity(4, 1) == 4);
  CHECK(robin::harmonic_multiplicity(4, 2) == 9);
  CHECK(robin::harmonic_multiplicity(5, 1) == 5);
  CHECK_THROWS_AS(robin::harmonic_multiplicity(2, -1), std::invalid_argument);

  const auto m = robin::ModeSpec::make(3, 2);
  CHECK(m.ell == 2);
  CHECK(m.effective_order == 2.5);
  CHECK(m.multiplicity == 5);
}
