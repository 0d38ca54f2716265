#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "robin/numerics.hpp"
#include "robin/ode.hpp"

using robin::OdeState;

TEST_CASE("adaptive integrator on the harmonic oscillator") {
  auto rhs = [](double, const OdeState<2>& y) { return OdeState<2>{y[1], -y[0]}; };
  OdeState<2> y{1.0, 0.0};
  robin::integrate<2>(rhs, y, 0.0, 10.0, robin::OdeTolerances{});
  CHECK(y[0] == doctest::Approx(std::cos(10.0)).epsilon(1e-10));
  CHECK(y[1] == doctest::Approx(-std::sin(10.0)).epsilon(1e-10));
  // Energy is conserved to the tolerance.
  CHECK(std::fabs(y[0] * y[0] + y[1] * y[1] - 1.0) < 1e-10);
}

TEST_CASE("integration backwards returns to the start") {
  auto rhs = [](double t, const OdeState<1>& y) { return OdeState<1>{t * y[0]}; };
  OdeState<1> y{1.0};
  robin::integrate<1>(rhs, y, 0.0, 2.0, robin::OdeTolerances{});
  CHECK(y[0] == doctest::Approx(std::exp(2.0)).epsilon(1e-10));
  robin::integrate<1>(rhs, y, 2.0, 0.0, robin::OdeTolerances{});
  CHECK(y[0] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("on_step sees every accepted step and ends at t1") {
  auto rhs = [](double, const OdeState<1>& y) { return OdeState<1>{-y[0]}; };
  OdeState<1> y{1.0};
  std::vector<double> ts;
  robin::integrate<1>(rhs, y, 0.0, 3.0, robin::OdeTolerances{}, [&](double t, const OdeState<1>&) { ts.push_back(t); });
  REQUIRE(!ts.empty());
  CHECK(ts.back() == 3.0);
  for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i] > ts[i - 1]);
}

TEST_CASE("fixed-step RK4 converges at fourth order") {
  auto rhs = [](double, const OdeState<1>& y) { return OdeState<1>{y[0]}; };
  auto err = [&](std::size_t n) {
    OdeState<1> y{1.0};
    robin::integrate_fixed<1>(rhs, y, 0.0, 1.0, n);
    return std::fabs(y[0] - std::numbers::e);
  };
  const double ratio = err(20) / err(40);
  CHECK(ratio == doctest::Approx(16.0).epsilon(0.05));
}

TEST_CASE("integrator failures raise IntegrationError") {
  robin::OdeTolerances tight;
  tight.max_steps = 5;
  auto stiff = [](double, const OdeState<1>& y) { return OdeState<1>{-1e4 * y[0]}; };
  OdeState<1> y{1.0};
  CHECK_THROWS_AS(robin::integrate<1>(stiff, y, 0.0, 10.0, tight), robin::IntegrationError);

  auto blowup = [](double, const OdeState<1>& y) { return OdeState<1>{y[0] * y[0]}; };
  OdeState<1> z{1.0};
  CHECK_THROWS_AS(robin::integrate<1>(blowup, z, 0.0, 2.0, robin::OdeTolerances{}), robin::SolverError);
}

TEST_CASE("Brent's method") {
  auto f = [](double x) { return std::cos(x) - x; };
  const double root = robin::brent(f, 0.0, 1.0);
  CHECK(root == doctest::Approx(0.7390851332151607).epsilon(1e-15));
  CHECK(robin::brent([](double x) { return x - 0.25; }, 0.25, 1.0) == 0.25);
  CHECK_THROWS_AS(robin::brent([](double x) { return x * x + 1; }, -1.0, 1.0), robin::RootError);
  robin::RootOptions few;
  few.max_iterations = 2;
  few.abs_tol = 0.0;
  few.rel_tol = 0.0;
  CHECK_THROWS_AS(robin::brent(f, 0.0, 1.0, few), robin::RootError);
}

TEST_CASE("Gauss-Legendre rules") {
  for (std::size_t n : {1u, 2u, 5u, 20u}) {
    const robin::GaussLegendre g(n);
    double wsum = 0.0;
    for (double w : g.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    // Exact for x^{2n-2}: ∫_{-1}^{1} x^{2m} dx = 2/(2m+1).
    const int m = static_cast<int>(n) - 1;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += g.weights[i] * std::pow(g.nodes[i], 2 * m);
    CHECK(s == doctest::Approx(2.0 / (2 * m + 1)).epsilon(1e-13));
  }
  CHECK(robin::integrate_gl([](double x) { return std::exp(-x * x); }, 0.0, 3.0) ==
        doctest::Approx(0.5 * std::sqrt(std::numbers::pi) * std::erf(3.0)).epsilon(1e-15));
}
