#pragma once

// Modified Bessel functions I_nu and K_nu of real order nu >= 0 and real
// argument x > 0.
//
// Evaluation follows Temme's method: the order is split as nu = mu + n with
// |mu| <= 1/2. K_mu and K_{mu+1} come from Temme's series for x < 2 and from
// Steed's continued fraction (CF2) for x >= 2, then K is recurred upward in
// order. The ratio I_nu'/I_nu comes from the continued fraction CF1 and I_nu
// is fixed by the Wronskian I K' - I' K = -1/x. All accumulation happens in
// long double.
//
// Supported domain: 0 <= nu <= 20 and 0 < x <= 100. Anything outside throws
// std::domain_error; a result that is not representable as a finite double
// throws std::overflow_error.

namespace robin::bessel {

inline constexpr double kMaxOrder = 20.0;
inline constexpr double kMaxArgument = 100.0;
// Below this argument K uses Temme's series, above it Steed's CF2.
inline constexpr double kSeriesSwitch = 2.0;

struct Values {
  double i = 0;        // I_nu(x)
  double k = 0;        // K_nu(x)
  double i_prime = 0;  // dI_nu/dx
  double k_prime = 0;  // dK_nu/dx
};

/// All four quantities from one evaluation. Requires x > 0.
Values evaluate(double nu, double x);

/// I_nu(x). x = 0 returns the limit (1 for nu = 0, 0 otherwise).
double bessel_i(double nu, double x);
double bessel_k(double nu, double x);
double bessel_i_prime(double nu, double x);
double bessel_k_prime(double nu, double x);

}  // namespace robin::bessel
