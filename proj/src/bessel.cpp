#include "robin/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace robin::bessel {

namespace {

using real = long double;

constexpr real kEps = std::numeric_limits<real>::epsilon();
constexpr real kTiny = std::numeric_limits<real>::min() / std::numeric_limits<real>::epsilon();
constexpr int kMaxIterations = 100000;
constexpr real kPi = std::numbers::pi_v<real>;

void check_domain(double nu, double x, const char* fn) {
  if (!std::isfinite(nu) || !std::isfinite(x) || nu < 0.0 || nu > kMaxOrder || x < 0.0 ||
      x > kMaxArgument) {
    std::ostringstream msg;
    msg << fn << ": argument out of supported domain (nu=" << nu << ", x=" << x
        << "; need 0 <= nu <= " << kMaxOrder << ", 0 < x <= " << kMaxArgument << ")";
    throw std::domain_error(msg.str());
  }
}

double checked(real v, const char* what, double nu, double x) {
  const double out = static_cast<double>(v);
  if (!std::isfinite(out)) {
    std::ostringstream msg;
    msg << what << " overflows double at nu=" << nu << ", x=" << x;
    throw std::overflow_error(msg.str());
  }
  return out;
}

// gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2,
// for |mu| <= 1/2. Near mu = 0 the difference quotient is replaced by the
// Taylor series of 1/Gamma.
struct GammaTerms {
  real gam1, gam2, gampl, gammi;
};

GammaTerms temme_gamma(real mu) {
  // Taylor coefficients of 1/Gamma(z) = sum c_k z^k, k = 2..8.
  constexpr real c2 = 0.5772156649015328606065120900824024L;
  constexpr real c3 = -0.6558780715202538810770195151453905L;
  constexpr real c4 = -0.0420026350340952355290039348754298L;
  constexpr real c5 = 0.1665386113822914895017007951021053L;
  constexpr real c6 = -0.0421977345555443367482083012891874L;
  constexpr real c7 = -0.0096219715278769735621149216723481L;
  constexpr real c8 = 0.0072189432466630995423950103404465L;

  GammaTerms g{};
  g.gampl = 1.0L / std::tgamma(1.0L + mu);
  g.gammi = 1.0L / std::tgamma(1.0L - mu);
  if (std::fabs(mu) < 1e-4L) {
    const real m2 = mu * mu;
    g.gam1 = -(c2 + m2 * (c4 + m2 * (c6 + m2 * c8)));
    g.gam2 = 1.0L + m2 * (c3 + m2 * (c5 + m2 * c7));
  } else {
    g.gam1 = (g.gammi - g.gampl) / (2.0L * mu);
    g.gam2 = 0.5L * (g.gammi + g.gampl);
  }
  return g;
}

[[noreturn]] void no_convergence(const char* stage, double nu, double x) {
  std::ostringstream msg;
  msg << "bessel: " << stage << " failed to converge at nu=" << nu << ", x=" << x;
  throw std::runtime_error(msg.str());
}

}  // namespace

Values evaluate(double nu_in, double x_in) {
  check_domain(nu_in, x_in, "bessel::evaluate");
  if (x_in == 0.0) throw std::domain_error("bessel::evaluate: x must be > 0");

  const real nu = nu_in;
  const real x = x_in;
  const int nl = static_cast<int>(nu + 0.5L);
  const real mu = nu - nl;
  const real mu2 = mu * mu;
  const real xi = 1.0L / x;
  const real xi2 = 2.0L * xi;

  // CF1: f = I_nu'/I_nu by modified Lentz.
  real h = nu * xi;
  if (h < kTiny) h = kTiny;
  real b = xi2 * nu;
  real d = 0.0L;
  real c = h;
  int it = 1;
  for (; it <= kMaxIterations; ++it) {
    b += xi2;
    d = 1.0L / (b + d);
    c = b + 1.0L / c;
    const real del = c * d;
    h *= del;
    if (std::fabs(del - 1.0L) < kEps) break;
  }
  if (it > kMaxIterations) no_convergence("CF1", nu_in, x_in);

  // Downward recurrence of the unnormalized I ratio to order mu.
  real ril = kTiny;
  real ripl = h * ril;
  const real ril1 = ril;
  const real rip1 = ripl;
  real fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const real ritemp = fact * ril + ripl;
    fact -= xi;
    ripl = fact * ritemp + ril;
    ril = ritemp;
  }
  const real f = ripl / ril;

  real rkmu = 0.0L;
  real rk1 = 0.0L;
  if (x < kSeriesSwitch) {
    // Temme's series for K_mu and K_{mu+1}.
    const real x2 = 0.5L * x;
    const real pimu = kPi * mu;
    const real fct = std::fabs(pimu) < kEps ? 1.0L : pimu / std::sin(pimu);
    d = -std::log(x2);
    real e = mu * d;
    const real fct2 = std::fabs(e) < kEps ? 1.0L : std::sinh(e) / e;
    const GammaTerms g = temme_gamma(mu);
    real ff = fct * (g.gam1 * std::cosh(e) + g.gam2 * fct2 * d);
    real sum = ff;
    e = std::exp(e);
    real p = 0.5L * e / g.gampl;
    real q = 0.5L / (e * g.gammi);
    c = 1.0L;
    d = x2 * x2;
    real sum1 = p;
    int i = 1;
    for (; i <= kMaxIterations; ++i) {
      ff = (i * ff + p + q) / (i * static_cast<real>(i) - mu2);
      c *= d / i;
      p /= (i - mu);
      q /= (i + mu);
      const real del = c * ff;
      sum += del;
      const real del1 = c * (p - i * ff);
      sum1 += del1;
      if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    if (i > kMaxIterations) no_convergence("Temme series", nu_in, x_in);
    rkmu = sum;
    rk1 = sum1 * xi2;
  } else {
    // Steed's CF2 with Thompson-Barnett summation for K_mu, K_{mu+1}.
    b = 2.0L * (1.0L + x);
    d = 1.0L / b;
    real delh = d;
    h = d;
    real q1 = 0.0L;
    real q2 = 1.0L;
    const real a1 = 0.25L - mu2;
    real q = a1;
    c = a1;
    real a = -a1;
    real s = 1.0L + q * delh;
    int i = 2;
    for (; i <= kMaxIterations; ++i) {
      a -= 2 * (i - 1);
      c = -a * c / i;
      const real qnew = (q1 - b * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += c * qnew;
      b += 2.0L;
      d = 1.0L / (b + a * d);
      delh = (b * d - 1.0L) * delh;
      h += delh;
      const real dels = q * delh;
      s += dels;
      if (std::fabs(dels / s) < kEps) break;
    }
    if (i > kMaxIterations) no_convergence("CF2", nu_in, x_in);
    h = a1 * h;
    rkmu = std::sqrt(kPi / (2.0L * x)) * std::exp(-x) / s;
    rk1 = rkmu * (mu + x + 0.5L - h) * xi;
  }

  const real rkmup = mu * xi * rkmu - rk1;
  const real rimu = xi / (f * rkmu - rkmup);
  const real ri = rimu * ril1 / ril;
  const real rip = rimu * rip1 / ril;
  for (int i = 1; i <= nl; ++i) {
    const real rktemp = (mu + i) * xi2 * rk1 + rkmu;
    rkmu = rk1;
    rk1 = rktemp;
  }
  const real rk = rkmu;
  const real rkp = nu * xi * rkmu - rk1;

  Values v;
  v.i = checked(ri, "I_nu", nu_in, x_in);
  v.k = checked(rk, "K_nu", nu_in, x_in);
  v.i_prime = checked(rip, "I_nu'", nu_in, x_in);
  v.k_prime = checked(rkp, "K_nu'", nu_in, x_in);
  return v;
}

double bessel_i(double nu, double x) {
  check_domain(nu, x, "bessel_i");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  return evaluate(nu, x).i;
}

double bessel_k(double nu, double x) {
  check_domain(nu, x, "bessel_k");
  if (x == 0.0) throw std::domain_error("bessel_k: x must be > 0");
  return evaluate(nu, x).k;
}

double bessel_i_prime(double nu, double x) {
  check_domain(nu, x, "bessel_i_prime");
  if (x == 0.0) throw std::domain_error("bessel_i_prime: x must be > 0");
  return evaluate(nu, x).i_prime;
}

double bessel_k_prime(double nu, double x) {
  check_domain(nu, x, "bessel_k_prime");
  if (x == 0.0) throw std::domain_error("bessel_k_prime: x must be > 0");
  return evaluate(nu, x).k_prime;
}

}  // namespace robin::bessel
