// robin: Robin eigenvalues, shape derivatives and verification suites on
// balls and annuli.
//
// Exit codes: 0 ok, 1 a check failed, 2 invalid flags or config (nothing
// written), 3 solver failure (one JSON line on stderr).

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "robin/domain.hpp"
#include "robin/errors.hpp"
#include "robin/radial.hpp"
#include "robin/shape.hpp"
#include "robin/suite.hpp"
#include "robin/theorems.hpp"

namespace {

using robin::format_double;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInvalid = 2;
constexpr int kSolverFailure = 3;

int report_error(const char* kind, const std::string& message, int code) {
  nlohmann::ordered_json line;
  line["error"] = kind;
  line["exit_code"] = code;
  line["message"] = message;
  std::cerr << line.dump() << '\n';
  return code;
}

struct DomainFlags {
  std::optional<double> ball;
  std::vector<double> annulus;
  int dim = 2;

  robin::DomainSpec domain() const {
    if (ball) return robin::DomainSpec::ball(dim, *ball);
    if (annulus.size() == 2) return robin::DomainSpec::annulus(dim, annulus[0], annulus[1]);
    throw std::invalid_argument("one of --ball R or --annulus R1 R2 is required");
  }
};

void add_domain_flags(CLI::App* cmd, DomainFlags& f) {
  auto* b = cmd->add_option("--ball", f.ball, "Ball of radius R");
  auto* a = cmd->add_option("--annulus", f.annulus, "Annulus with radii R1 < R2")->expected(2);
  b->excludes(a);
  a->excludes(b);
  cmd->add_option("--dim", f.dim, "Space dimension")->check(CLI::Range(2, 64));
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ',';
    s += cells[i];
  }
  return s + '\n';
}

void emit(const std::string& text, const std::string& out_dir, const std::string& file) {
  std::cout << text;
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  std::ofstream f(std::filesystem::path(out_dir) / file, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write '" + out_dir + "/" + file + "'");
  f << text;
}

// ---- eig ----------------------------------------------------------------------

struct EigOptions {
  DomainFlags domain;
  double alpha = 0;
  std::optional<int> ell;
  int count = 1;
  std::string out;
  std::optional<double> tol;
};

int run_eig(const EigOptions& o) {
  robin::SolverConfig cfg;
  if (o.tol) robin::set_tolerance(cfg, *o.tol);
  const robin::RobinProblem problem(o.domain.domain(), o.alpha);

  struct Row {
    double lambda;
    int ell, n;
    long multiplicity;
    double residual;
  };
  std::vector<Row> rows;
  auto residual = [&](const robin::Eigenpair& p) {
    const auto r = robin::boundary_residuals(problem, p);
    return std::max(r.inner, r.outer);
  };
  if (o.ell) {
    const auto mode = robin::ModeSpec::make(problem.domain().dimension(), *o.ell);
    for (const auto& p : robin::lowest_eigenpairs(problem, mode, static_cast<std::size_t>(o.count), cfg))
      rows.push_back({p.lambda, mode.ell, p.n, mode.multiplicity, residual(p)});
  } else {
    const auto spec = robin::assemble_spectrum(problem, o.count, static_cast<std::size_t>(o.count), cfg);
    std::size_t listed = 0;
    for (const auto& e : spec.entries) {
      const auto mode = robin::ModeSpec::make(problem.domain().dimension(), e.ell);
      const auto pair = robin::shooting_eigenpair(problem, mode, e.lambda, cfg);
      for (long m = 0; m < e.multiplicity && listed < spec.count; ++m, ++listed)
        rows.push_back({e.lambda, e.ell, e.n, e.multiplicity, residual(pair)});
    }
  }

  std::string text = "# " + problem.domain().describe() + " alpha=" + format_double(o.alpha) + "\n";
  text += csv_line({"index", "lambda", "ell", "n", "multiplicity", "residual"});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    text += csv_line({std::to_string(i + 1), format_double(r.lambda), std::to_string(r.ell),
                      std::to_string(r.n), std::to_string(r.multiplicity), format_double(r.residual)});
  }
  emit(text, o.out, "eig.csv");
  return kOk;
}

// ---- sweep --------------------------------------------------------------------

struct SweepOptions {
  double r1 = 1.0;
  double alpha = 0;
  double r2_from = 0, r2_to = 0;
  int steps = 1;
  std::string out;
  std::optional<double> tol;
};

int run_sweep(const SweepOptions& o) {
  if (!(o.r2_from > o.r1)) throw std::invalid_argument("--r2-from must exceed --r1");
  if (!(o.r2_to >= o.r2_from)) throw std::invalid_argument("--r2-to must be >= --r2-from");
  if (o.steps > 1 && !(o.r2_to > o.r2_from)) throw std::invalid_argument("--r2-to must exceed --r2-from");
  robin::SolverConfig cfg;
  if (o.tol) robin::set_tolerance(cfg, *o.tol);
  robin::Table t{"sweep", {"r2", "lambda1", "hadamard_outer"}, {}};
  for (int i = 0; i < o.steps; ++i) {
    const double r2 = i + 1 == o.steps && o.steps > 1
                          ? o.r2_to
                          : o.r2_from + (o.r2_to - o.r2_from) * i / std::max(1, o.steps - 1);
    const robin::RobinProblem problem(robin::DomainSpec::annulus(2, o.r1, r2), o.alpha);
    const auto first = robin::first_eigenpair(problem, {}, cfg);
    t.rows.push_back({r2, first.lambda,
                      robin::hadamard_derivative(problem, first, robin::BoundaryField::outer_normal())});
  }
  emit(robin::csv_text(t), o.out, "sweep.csv");
  return kOk;
}

// ---- verify -------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  std::string config;
  std::string out;
  std::optional<double> tol;
};

int run_verify(const VerifyOptions& o) {
  robin::RunConfig rc = o.config.empty() ? robin::RunConfig{} : robin::load_run_config(o.config);
  if (!o.out.empty()) rc.out_dir = o.out;
  if (o.tol) robin::set_tolerance(rc.solver, *o.tol);

  auto reports = robin::run_suite(o.suite, rc);
  robin::write_artifacts(reports, rc.out_dir);

  bool all_passed = true, solver_failed = false;
  for (const auto& r : reports) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.check_name << " margin=" << format_double(r.margin) << '\n';
    for (const auto& s : r.subchecks)
      std::cout << "  " << (s.passed ? "ok   " : "FAIL ") << s.name << " margin=" << format_double(s.margin)
                << '\n';
    for (const auto& d : r.diagnostics) std::cout << "  note " << d << '\n';
    all_passed = all_passed && r.passed;
    solver_failed = solver_failed || r.solver_failure;
  }
  std::cout << "summary: " << (std::filesystem::path(rc.out_dir) / "summary.json").string() << '\n';
  if (solver_failed) {
    for (const auto& r : reports)
      if (r.solver_failure)
        report_error("solver", r.check_name + ": " + (r.diagnostics.empty() ? "" : r.diagnostics.front()),
                     kSolverFailure);
    return kSolverFailure;
  }
  return all_passed ? kOk : kCheckFailed;
}

// ---- derivative -----------------------------------------------------------------

struct DerivativeOptions {
  std::vector<double> annulus;
  double alpha = 0;
  std::vector<double> stationary;
  double fd_step = 1e-4;
  double threshold = 1e-4;
  std::string field = "outer";
  std::optional<double> tol;
};

int run_derivative(const DerivativeOptions& o) {
  if (o.annulus.size() != 2) throw std::invalid_argument("--annulus R1 R2 is required");
  robin::SolverConfig cfg;
  if (o.tol) robin::set_tolerance(cfg, *o.tol);
  const auto domain = robin::DomainSpec::annulus(2, o.annulus[0], o.annulus[1]);
  double alpha = o.alpha;
  if (!o.stationary.empty()) {
    alpha = robin::locate_stationary_alpha(o.annulus[0], o.annulus[1], o.stationary[0], o.stationary[1], cfg);
  } else if (!(alpha > 0.0)) {
    throw std::invalid_argument("--alpha must be > 0 (or use --stationary LO HI)");
  }
  const robin::RobinProblem problem(domain, alpha);
  const auto field = o.field == "outer" ? robin::BoundaryField::outer_normal()
                                        : robin::BoundaryField::volume_preserving(domain, 1.0);
  const auto rep = robin::derivative_report(problem, field, o.fd_step, cfg);
  const double abs_gap = std::fabs(rep.hadamard_value - rep.fd_value);
  const bool ok = rep.rel_discrepancy <= o.threshold || abs_gap <= o.threshold;

  std::cout << "domain=" << domain.describe() << '\n'
            << "alpha=" << format_double(alpha) << '\n'
            << "field=" << o.field << " outer_weight=" << format_double(field.outer_weight())
            << " inner_weight=" << format_double(field.inner_weight()) << '\n'
            << "hadamard=" << format_double(rep.hadamard_value) << '\n'
            << "fd=" << format_double(rep.fd_value) << '\n'
            << "fd_step=" << format_double(rep.fd_step) << '\n'
            << "rel_discrepancy=" << format_double(rep.rel_discrepancy) << '\n'
            << "abs_discrepancy=" << format_double(abs_gap) << '\n'
            << "threshold=" << format_double(o.threshold) << '\n'
            << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robin eigenvalues on balls and annuli"};
  app.require_subcommand(1);

  EigOptions eig;
  auto* eig_cmd = app.add_subcommand("eig", "Lowest eigenvalues of a ball or annulus");
  add_domain_flags(eig_cmd, eig.domain);
  eig_cmd->add_option("--alpha", eig.alpha, "Robin parameter")->required()->check(CLI::PositiveNumber);
  eig_cmd->add_option("--ell", eig.ell, "Restrict to one angular index")->check(CLI::NonNegativeNumber);
  eig_cmd->add_option("--count", eig.count, "Number of eigenvalues")->check(CLI::Range(1, 1000));
  eig_cmd->add_option("--out", eig.out, "Directory for eig.csv");
  eig_cmd->add_option("--tol", eig.tol, "ODE tolerance");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "lambda1 and its outer-field derivative along r2");
  sweep_cmd->add_option("--r1", sweep.r1, "Inner radius")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--alpha", sweep.alpha, "Robin parameter")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--r2-from", sweep.r2_from, "First outer radius")->required();
  sweep_cmd->add_option("--r2-to", sweep.r2_to, "Last outer radius")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "Number of radii")->check(CLI::Range(1, 100000));
  sweep_cmd->add_option("--out", sweep.out, "Directory for sweep.csv");
  sweep_cmd->add_option("--tol", sweep.tol, "ODE tolerance");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify.suite, "Suite name")
      ->check(CLI::IsMember(robin::suite_names()));
  verify_cmd->add_option("--config", verify.config, "Run configuration (flat JSON)");
  verify_cmd->add_option("--out", verify.out, "Artifact directory (overrides the config)");
  verify_cmd->add_option("--tol", verify.tol, "ODE tolerance");

  DerivativeOptions deriv;
  auto* deriv_cmd = app.add_subcommand("derivative", "Hadamard derivative against finite differences");
  deriv_cmd->add_option("--annulus", deriv.annulus, "Annulus radii R1 < R2")->expected(2)->required();
  auto* alpha_opt = deriv_cmd->add_option("--alpha", deriv.alpha, "Robin parameter")->check(CLI::PositiveNumber);
  deriv_cmd->add_option("--stationary", deriv.stationary, "Use the alpha in [LO, HI] where G = 0")
      ->expected(2)
      ->excludes(alpha_opt);
  deriv_cmd->add_option("--fd-step", deriv.fd_step, "Central difference step")->check(CLI::PositiveNumber);
  deriv_cmd->add_option("--threshold", deriv.threshold, "Allowed discrepancy")->check(CLI::PositiveNumber);
  deriv_cmd->add_option("--field", deriv.field, "outer or volume")->check(CLI::IsMember({"outer", "volume"}));
  deriv_cmd->add_option("--tol", deriv.tol, "ODE tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("invalid_arguments", e.what(), kInvalid);
  }

  try {
    if (*eig_cmd) return run_eig(eig);
    if (*sweep_cmd) return run_sweep(sweep);
    if (*verify_cmd) return run_verify(verify);
    if (*deriv_cmd) return run_derivative(deriv);
  } catch (const robin::ConfigError& e) {
    return report_error("config", e.what(), kInvalid);
  } catch (const robin::SolverError& e) {
    return report_error("solver", e.what(), kSolverFailure);
  } catch (const std::invalid_argument& e) {
    return report_error("invalid_arguments", e.what(), kInvalid);
  } catch (const std::domain_error& e) {
    return report_error("invalid_arguments", e.what(), kInvalid);
  } catch (const std::exception& e) {
    return report_error("solver", e.what(), kSolverFailure);
  }
  return kInvalid;
}
