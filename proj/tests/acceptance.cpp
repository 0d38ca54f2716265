// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "robin/bessel.hpp"
#include "robin/radial.hpp"
#include "robin/suite.hpp"
#include "robin/theorems.hpp"

using robin::DomainSpec;
using robin::RobinProblem;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(double x) { return robin::format_double(x); }

const std::vector<std::pair<double, double>> kAnnuli{{1.0, 1.5}, {1.0, 2.0}, {1.0, 4.0}};
const std::vector<double> kAlphas{0.5, 1.0, 5.0};

Outcome cross_engine() {
  double worst = 0.0;
  for (const auto& [r1, r2] : kAnnuli)
    for (double a : kAlphas) {
      const RobinProblem p(DomainSpec::annulus(2, r1, r2), a);
      const double s = robin::first_eigenpair(p).lambda;
      const double b = robin::eigenvalue_bessel(p).lambda;
      worst = std::max(worst, std::fabs(s - b) / std::fabs(s));
    }
  return {worst <= 1e-8, "max relative difference " + fmt(worst)};
}

Outcome negativity() {
  std::vector<RobinProblem> list;
  for (const auto& [r1, r2] : kAnnuli)
    for (double a : kAlphas) list.emplace_back(DomainSpec::annulus(2, r1, r2), a);
  for (int d : {2, 3})
    for (double a : kAlphas) list.emplace_back(DomainSpec::ball(d, 1.0), a);
  const auto r = robin::verify_negativity_bound(list);
  return {r.passed, std::to_string(list.size()) + " configurations, smallest bound - lambda1 = " + fmt(r.margin)};
}

Outcome theorem1() {
  const auto r = robin::verify_theorem1(1.0, {0.5, 1, 2, 5}, {1.2, 1.5, 2, 3, 5}, 1e-4, 1e-4);
  return {r.passed, "worst margin " + fmt(r.margin)};
}

Outcome riccati() {
  const auto r = robin::verify_riccati(1.0, {0.5, 1, 2, 5}, {1.2, 1.5, 2, 3, 5}, 1e-8);
  return {r.passed, "worst margin " + fmt(r.margin)};
}

Outcome asymptotics() {
  const auto b = robin::verify_asymptotics(DomainSpec::ball(2, 1), {5, 10, 20, 40}, 3.0);
  const auto a = robin::verify_asymptotics(DomainSpec::annulus(2, 1, 2), {5, 10, 20, 40}, 3.0);
  return {a.passed && b.passed, "ball margin " + fmt(b.margin) + ", annulus margin " + fmt(a.margin)};
}

Outcome steklov_link() {
  double worst = 0.0, next = INFINITY;
  for (int d : {2, 3})
    for (double r : {1.0, 2.0}) {
      const auto s = robin::assemble_spectrum(RobinProblem(DomainSpec::ball(d, r), 1.0 / r), 3,
                                              static_cast<std::size_t>(d) + 2)
                         .values();
      for (int i = 1; i <= d; ++i) worst = std::max(worst, std::fabs(s[static_cast<std::size_t>(i)]));
      next = std::min(next, s.back());
    }
  return {worst <= 1e-8 && next > 1e-8, "max |lambda_2..d+1| " + fmt(worst) + ", lambda_{d+2} >= " + fmt(next)};
}

Outcome theorem2() {
  const auto r = robin::verify_theorem2_radial(2, std::numbers::pi, {0.25, 0.5, 0.75}, 1e-8);
  return {r.passed, "worst margin " + fmt(r.margin)};
}

Outcome crossing() {
  const auto r = robin::crossing_search(std::numbers::pi, 1.0, 0.1, 50.0);
  std::string star = "none";
  for (const auto& [k, v] : r.parameters)
    if (k == "alpha_star") star = fmt(v.front());
  return {r.passed, "alpha* = " + star + ", worst margin " + fmt(r.margin)};
}

Outcome pinch() {
  const auto r = robin::pinch_check(2, 1.0, 1.0, {0.05, 0.02, 0.01});
  const bool all_compared = r.diagnostics.empty();
  return {r.passed && all_compared, "worst margin " + fmt(r.margin)};
}

// Richardson-extrapolated central difference, fourth order in h.
double derivative_oracle(double (*f)(double, double), double nu, double x) {
  const double h = 1e-3 * std::min(x, 1.0);
  auto d = [&](double s) { return (f(nu, x + s) - f(nu, x - s)) / (2 * s); };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

Outcome bessel_kernel() {
  namespace b = robin::bessel;
  double wr = 0.0, half = 0.0, deriv = 0.0;
  for (double nu = 0.0; nu <= 5.0; nu += 0.125)
    for (double x = 0.1; x <= 50.0; x *= 1.1) {
      const auto v = b::evaluate(nu, x);
      wr = std::max(wr, std::fabs(x * (v.i * v.k_prime - v.i_prime * v.k) + 1.0));
      const double di = derivative_oracle(b::bessel_i, nu, x);
      const double dk = derivative_oracle(b::bessel_k, nu, x);
      deriv = std::max({deriv, std::fabs(v.i_prime - di) / std::fabs(di), std::fabs(v.k_prime - dk) / std::fabs(dk)});
    }
  for (double x = 0.1; x <= 50.0; x *= 1.1) {
    const double s = std::sqrt(2.0 / (std::numbers::pi * x));
    const double c = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x);
    auto rel = [](double a, double e) { return std::fabs(a - e) / std::fabs(e); };
    half = std::max({half, rel(b::bessel_i(0.5, x), s * std::sinh(x)),
                     rel(b::bessel_i(1.5, x), s * (std::cosh(x) - std::sinh(x) / x)),
                     rel(b::bessel_k(0.5, x), c), rel(b::bessel_k(1.5, x), c * (1.0 + 1.0 / x))});
  }
  return {wr <= 1e-10 && half <= 1e-12 && deriv <= 1e-8,
          "wronskian " + fmt(wr) + ", half-integer " + fmt(half) + ", derivatives " + fmt(deriv)};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const auto base = fs::temp_directory_path() / "robin_acceptance";
  fs::remove_all(base);
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* run : {"a", "b"}) {
    auto reports = robin::run_suite("all", robin::RunConfig{});
    robin::write_artifacts(reports, base / run);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  std::size_t files = 0;
  bool same = true;
  for (const auto& e : fs::directory_iterator(base / "a")) {
    ++files;
    const auto other = base / "b" / e.path().filename();
    same = same && fs::exists(other) && slurp(e.path()) == slurp(other);
  }
  fs::remove_all(base);
  const double per_run = seconds / 2.0;
  return {same && files > 1 && per_run <= 300.0,
          std::to_string(files) + " files byte-identical: " + (same ? "yes" : "no") + ", suite runtime " +
              fmt(std::round(per_run * 100.0) / 100.0) + " s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"cross-engine equivalence", cross_engine},
      {"negativity bound", negativity},
      {"monotonicity and Hadamard derivative", theorem1},
      {"Riccati mechanics", riccati},
      {"large-alpha asymptotics", asymptotics},
      {"second ball eigenvalue at alpha = 1/r", steklov_link},
      {"second annulus eigenvalue bound", theorem2},
      {"annulus-ball crossing", crossing},
      {"pinched ball", pinch},
      {"Bessel kernel identities", bessel_kernel},
      {"determinism and runtime", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2zu %s: %s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
