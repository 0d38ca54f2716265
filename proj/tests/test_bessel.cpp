#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "robin/bessel.hpp"

namespace bessel = robin::bessel;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// Σ (x/2)^{2k+ν} / (k! Γ(k+ν+1)), summed in long double.
long double series_i(long double nu, long double x, int terms = 60) {
  long double term = std::pow(x / 2, nu) / std::tgamma(nu + 1);
  long double sum = term;
  for (int k = 1; k < terms; ++k) {
    term *= (x * x / 4) / (k * (k + nu));
    sum += term;
  }
  return sum;
}

// K_ν(x) = ∫_0^∞ e^{-x cosh t} cosh(νt) dt by the trapezoidal rule, which
// converges geometrically for this integrand.
long double integral_k(long double nu, long double x) {
  const long double h = 1.0L / 256;
  long double sum = 0.5L * std::exp(-x);
  for (int j = 1; j < 256 * 40; ++j) {
    const long double t = j * h;
    const long double v = std::exp(-x * std::cosh(t)) * std::cosh(nu * t);
    sum += v;
    if (v < 1e-30L * sum) break;
  }
  return sum * h;
}

}  // namespace

TEST_CASE("I_0(1) and K_0(1) against independent evaluations") {
  // Frozen from the 60-term series and the cosh integral in long double.
  CHECK(bessel::bessel_i(0.0, 1.0) == doctest::Approx(1.2660658777520082).epsilon(1e-15));
  CHECK(bessel::bessel_k(0.0, 1.0) == doctest::Approx(0.42102443824070834).epsilon(1e-15));
  CHECK(rel(bessel::bessel_i(0.0, 1.0), static_cast<double>(series_i(0, 1))) < 1e-14);
  CHECK(rel(bessel::bessel_k(0.0, 1.0), static_cast<double>(integral_k(0, 1))) < 1e-14);
}

TEST_CASE("series and integral oracles across orders and arguments") {
  for (double nu : {0.0, 0.3, 0.5, 1.0, 2.5, 4.0, 7.25}) {
    for (double x : {0.05, 0.5, 1.9, 2.1, 5.0, 12.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(rel(bessel::bessel_i(nu, x), static_cast<double>(series_i(nu, x, 120))) < 1e-13);
      CHECK(rel(bessel::bessel_k(nu, x), static_cast<double>(integral_k(nu, x))) < 1e-12);
    }
  }
}

TEST_CASE("half-integer closed forms") {
  for (double x : {0.1, 0.7, 1.0, 3.0, 10.0, 40.0, 90.0}) {
    CAPTURE(x);
    const double s = std::sqrt(2.0 / (std::numbers::pi * x));
    const double c = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x);
    CHECK(rel(bessel::bessel_i(0.5, x), s * std::sinh(x)) < 1e-12);
    CHECK(rel(bessel::bessel_i(1.5, x), s * (std::cosh(x) - std::sinh(x) / x)) < 1e-12);
    CHECK(rel(bessel::bessel_k(0.5, x), c) < 1e-12);
    CHECK(rel(bessel::bessel_k(1.5, x), c * (1.0 + 1.0 / x)) < 1e-12);
    CHECK(rel(bessel::bessel_k(2.5, x), c * (1.0 + 3.0 / x + 3.0 / (x * x))) < 1e-12);
  }
}

TEST_CASE("agreement with the standard library special functions") {
  for (double nu = 0.0; nu <= 20.0; nu += 1.75) {
    for (double x : {0.01, 0.2, 1.0, 1.99, 2.0, 2.01, 6.0, 25.0, 60.0, 100.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      const double ki = std::cyl_bessel_k(nu, x);
      const double ii = std::cyl_bessel_i(nu, x);
      if (std::isnormal(ii)) CHECK(rel(bessel::bessel_i(nu, x), ii) < 1e-12);
      if (std::isnormal(ki) && ki < 1e300) CHECK(rel(bessel::bessel_k(nu, x), ki) < 1e-12);
    }
  }
}

TEST_CASE("Wronskian I K' - I' K = -1/x") {
  for (double nu = 0.0; nu <= 5.0; nu += 0.25) {
    for (double x = 0.1; x <= 50.0; x *= 1.37) {
      const auto v = bessel::evaluate(nu, x);
      const double w = v.i * v.k_prime - v.i_prime * v.k;
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(std::fabs(w * x + 1.0) < 1e-10);
    }
  }
}

TEST_CASE("derivatives match central differences") {
  // Richardson-extrapolated central differences, fourth order in h.
  auto fd = [](double (*f)(double, double), double nu, double x) {
    const double h = 1e-3 * std::min(x, 1.0);
    auto d = [&](double s) { return (f(nu, x + s) - f(nu, x - s)) / (2 * s); };
    return (4.0 * d(h / 2) - d(h)) / 3.0;
  };
  for (double nu : {0.0, 0.5, 1.0, 3.3, 6.0}) {
    for (double x : {0.3, 1.0, 2.0, 4.5, 20.0, 49.0}) {
      const double di = fd(bessel::bessel_i, nu, x);
      const double dk = fd(bessel::bessel_k, nu, x);
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(rel(bessel::bessel_i_prime(nu, x), di) < 1e-8);
      CHECK(rel(bessel::bessel_k_prime(nu, x), dk) < 1e-8);
    }
  }
}

TEST_CASE("recurrences tie neighbouring orders") {
  // I_{ν-1} - I_{ν+1} = (2ν/x) I_ν and K_{ν+1} - K_{ν-1} = (2ν/x) K_ν.
  for (double nu : {1.0, 2.2, 9.0}) {
    for (double x : {0.4, 3.0, 30.0}) {
      const double lhs_i = bessel::bessel_i(nu - 1, x) - bessel::bessel_i(nu + 1, x);
      const double lhs_k = bessel::bessel_k(nu + 1, x) - bessel::bessel_k(nu - 1, x);
      CHECK(rel(lhs_i, 2 * nu / x * bessel::bessel_i(nu, x)) < 1e-11);
      CHECK(rel(lhs_k, 2 * nu / x * bessel::bessel_k(nu, x)) < 1e-11);
    }
  }
}

TEST_CASE("limits at the origin and small orders near the gamma-series switch") {
  CHECK(bessel::bessel_i(0.0, 0.0) == 1.0);
  CHECK(bessel::bessel_i(2.0, 0.0) == 0.0);
  CHECK(bessel::bessel_i(0.5, 0.0) == 0.0);
  for (double mu : {1e-9, 1e-5, 9.9e-5, 1.01e-4, 1e-3}) {
    CAPTURE(mu);
    CHECK(rel(bessel::bessel_k(mu, 1.0), static_cast<double>(integral_k(mu, 1.0))) < 1e-13);
    CHECK(rel(bessel::bessel_k(1.0 + mu, 0.5), static_cast<double>(integral_k(1.0 + mu, 0.5))) < 1e-13);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bessel::bessel_i(-0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(bessel::bessel_i(20.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(bessel::bessel_k(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(bessel::bessel_k(1.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(bessel::bessel_i(1.0, 100.5), std::domain_error);
  CHECK_THROWS_AS(bessel::evaluate(1.0, std::nan("")), std::domain_error);
}
