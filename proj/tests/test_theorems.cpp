#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "robin/numerics.hpp"
#include "robin/theorems.hpp"

using robin::DomainSpec;
using robin::RobinProblem;

namespace {

double sub_margin(const robin::VerificationReport& r, const std::string& name) {
  for (const auto& s : r.subchecks)
    if (s.name == name) return s.margin;
  FAIL("missing sub-check " << name);
  return 0.0;
}

}  // namespace

TEST_CASE("report margins fold sub-checks") {
  robin::VerificationReport r;
  r.add("a", 0.5);
  r.add("b", 0.1);
  r.finalize();
  CHECK(r.passed);
  CHECK(r.margin == 0.1);
  r.add("c", -1e-3);
  r.finalize();
  CHECK_FALSE(r.passed);
  CHECK(r.margin == -1e-3);
  robin::VerificationReport empty;
  empty.finalize();
  CHECK_FALSE(empty.passed);
  robin::VerificationReport failed;
  failed.add("a", 1.0);
  failed.fail("solver gave up");
  failed.finalize();
  CHECK_FALSE(failed.passed);
  CHECK(failed.solver_failure);
}

TEST_CASE("monotonicity in the outer radius") {
  const auto r = robin::verify_theorem1(1.0, {1.0}, {1.5, 2.0, 3.0, 4.0});
  CHECK(r.passed);
  REQUIRE(r.tables.size() == 1);
  const auto& rows = r.tables[0].rows;
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][1] > rows[i - 1][1]);
  for (const auto& row : rows) CHECK(row[2] > 0.0);

  const auto single = robin::verify_theorem1(1.0, {2.0}, {3.0});
  CHECK(single.passed);
  for (const auto& s : single.subchecks) CHECK(s.name.find("monotone") == std::string::npos);

  CHECK_THROWS_AS(robin::verify_theorem1(1.0, {1.0}, {0.5, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(robin::verify_theorem1(1.0, {1.0}, {3.0, 2.0}), std::invalid_argument);
}

TEST_CASE("negativity bound") {
  const RobinProblem ball(DomainSpec::ball(2, 1), 1.0);
  const RobinProblem ann(DomainSpec::annulus(2, 1, 2), 1.0);
  CHECK(robin::negativity_bound(ball) == doctest::Approx(-2.0));
  CHECK(robin::negativity_bound(ann) == doctest::Approx(-2.0));
  std::vector<RobinProblem> list;
  for (double a : {0.1, 1.0, 10.0}) {
    list.emplace_back(DomainSpec::ball(2, 1), a);
    list.emplace_back(DomainSpec::annulus(2, 1, 2), a);
    list.emplace_back(DomainSpec::annulus(3, 0.5, 1), a);
  }
  const auto r = robin::verify_negativity_bound(list);
  CHECK(r.passed);
  REQUIRE(r.tables.size() == 1);
  CHECK(r.tables[0].rows.size() == list.size());
  for (const auto& row : r.tables[0].rows) CHECK(row[6] > 0.0);
}

TEST_CASE("large-alpha remainder") {
  CHECK(robin::asymptotic_remainder(-31.0, 5.0, 1.0) == doctest::Approx(-0.2));
  const auto ball = robin::verify_asymptotics(DomainSpec::ball(2, 1), {5, 10, 20, 40});
  const auto ann = robin::verify_asymptotics(DomainSpec::annulus(2, 1, 2), {5, 10, 20, 40});
  CHECK(ball.passed);
  CHECK(ann.passed);
  CHECK(ball.check_name == "asymptotics_ball");
  CHECK(ann.check_name == "asymptotics_annulus");
  const auto& rows = ball.tables[0].rows;
  CHECK(std::fabs(rows.back()[2]) * 3.0 < std::fabs(rows.front()[2]));
  CHECK_THROWS_AS(robin::verify_asymptotics(DomainSpec::ball(2, 1), {5, 10}), std::invalid_argument);
  CHECK_THROWS_AS(robin::verify_asymptotics(DomainSpec::ball(2, 1), {40, 20, 10, 5}), std::invalid_argument);
}

TEST_CASE("annulus overtakes the ball of equal area") {
  const auto r = robin::crossing_search(std::numbers::pi, 1.0, 0.1, 50.0);
  CHECK(r.passed);
  double star = 0.0;
  for (const auto& [k, v] : r.parameters)
    if (k == "alpha_star") star = v.front();
  CHECK(star > 0.1);
  CHECK(star < 50.0);
  CHECK(sub_margin(r, "gap_at_alpha_star") > 0.0);
  for (const auto& row : r.tables[0].rows) {
    if (row[0] > star + 1e-6) CHECK(row[3] > 0.0);
    if (row[0] < star - 1e-6) CHECK(row[3] < 0.0);
  }
  // The window misses the crossing.
  const auto miss = robin::crossing_search(std::numbers::pi, 1.0, 0.1, 0.2, {8});
  CHECK_FALSE(miss.passed);
  CHECK_FALSE(miss.diagnostics.empty());
}

TEST_CASE("pinch quotient is a Rayleigh upper bound") {
  // The quotient at ε -> 0 tends to the ball eigenvalue.
  const double lb = robin::first_eigenpair(RobinProblem(DomainSpec::ball(2, 1), 1.0)).lambda;
  CHECK(robin::pinch_quotient(2, 1.0, 1.0, 1e-5) == doctest::Approx(lb).epsilon(1e-4));
  const auto r = robin::pinch_check(2, 1.0, 1.0, {0.01, 0.02, 0.05});
  CHECK(r.passed);
  for (const auto& row : r.tables[0].rows) {
    CHECK(row[1] < row[2]);
    CHECK(row[3] >= row[1]);
  }
  const auto tiny = robin::pinch_check(2, 1.0, 1.0, {1e-4});
  CHECK(tiny.passed);
  CHECK_FALSE(tiny.diagnostics.empty());
  CHECK_THROWS_AS(robin::pinch_check(2, 1.0, 1.0, {1.5}), std::invalid_argument);
  // Also in three dimensions.
  CHECK(robin::pinch_check(3, 1.0, 1.0, {0.05}).passed);
}

TEST_CASE("Steklov eigenvalues of balls") {
  const auto s2 = robin::steklov_ball(2, 1.0);
  REQUIRE(s2.eigenvalues.size() == 3);
  CHECK(s2.eigenvalues[0] == 0.0);
  CHECK(s2.eigenvalues[1] == 1.0);
  CHECK(s2.eigenvalues[2] == 1.0);
  const auto s3 = robin::steklov_ball(3, 2.0);
  REQUIRE(s3.eigenvalues.size() == 4);
  for (int i = 1; i < 4; ++i) CHECK(s3.eigenvalues[static_cast<std::size_t>(i)] == 0.5);
  CHECK(s3.boundary_residual < 1e-10);
  CHECK(s3.laplacian_residual < 1e-6);
}

TEST_CASE("test-function bound for radial domains") {
  // Ball: the numerator cancels exactly.
  CHECK(std::fabs(robin::theorem2_bound(2, 0.0, 1.0)) < 1e-14);
  CHECK(std::fabs(robin::theorem2_bound(3, 0.0, 1.3)) < 1e-14);
  // Moments against quadrature, d = 2, r1 = 0.5.
  const double r1 = 0.5, r2 = std::sqrt(1.25);
  const auto m = robin::second_moments(2, r1, r2);
  const double vol = robin::integrate_gl([](double r) { return 2.0 * std::numbers::pi * r * r * r; }, r1, r2);
  CHECK(m.volume == doctest::Approx(vol).epsilon(1e-14));
  CHECK(m.boundary == doctest::Approx(2.0 * std::numbers::pi * (r2 * r2 * r2 + r1 * r1 * r1)));
  const double numerator = 2.0 * std::numbers::pi - m.boundary;
  CHECK(numerator < 0.0);
  CHECK(robin::theorem2_bound(2, r1, r2) == doctest::Approx(numerator / m.volume));
  // A shift only moves the bound monotonically away from a = 0.
  const double b0 = robin::theorem2_bound(2, r1, r2, 0.0);
  const double b1 = robin::theorem2_bound(2, r1, r2, 0.1);
  const double b2 = robin::theorem2_bound(2, r1, r2, 0.2);
  CHECK(robin::theorem2_bound(2, r1, r2, -0.1) == b1);
  CHECK(((b0 < b1 && b1 < b2) || (b0 > b1 && b1 > b2)));
}

TEST_CASE("second eigenvalue at alpha = 1/r") {
  const auto r = robin::verify_theorem2_radial(2, std::numbers::pi, {0.25, 0.5, 0.75});
  CHECK(r.passed);
  CHECK(r.check_name == "theorem2_d2");
  const auto& rows = r.tables[0].rows;
  REQUIRE(rows.size() == 4);
  CHECK(std::fabs(rows[0][2]) < 1e-8);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][2] <= rows[i][3] + 1e-8);
    CHECK(rows[i][3] <= 1e-8);
  }
  CHECK(robin::verify_theorem2_radial(3, 1.0, {0.3}).passed);
}
