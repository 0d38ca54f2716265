#pragma once

// Suite selection, run configuration and report artifacts.
//
// A run configuration is a flat JSON object. Every key is optional and
// falls back to the defaults below; unknown keys, wrong types, empty or
// unsorted grids and non-positive tolerances are rejected with ConfigError.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "robin/radial.hpp"
#include "robin/theorems.hpp"

namespace robin {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  double theorem1_r1 = 1.0;
  std::vector<double> theorem1_alphas{0.5, 1.0, 2.0, 5.0};
  std::vector<double> theorem1_r2_grid{1.2, 1.5, 2.0, 3.0, 5.0};
  double fd_step = 1e-4;
  double fd_tolerance = 1e-4;
  double riccati_tol = 1e-8;

  double bound_r1 = 1.0;
  std::vector<double> bound_r2_grid{1.5, 2.0, 4.0};
  std::vector<double> bound_ball_dims{2.0, 3.0};
  std::vector<double> bound_alphas{0.1, 0.5, 1.0, 5.0, 10.0};

  double asymptotics_ball_radius = 1.0;
  std::vector<double> asymptotics_annulus{1.0, 2.0};  // r1, r2
  std::vector<double> asymptotics_alphas{5.0, 10.0, 20.0, 40.0};
  double asymptotics_shrink = 3.0;

  double crossing_volume = 3.141592653589793;
  double crossing_r1 = 1.0;
  std::vector<double> crossing_alpha_window{0.1, 50.0};
  double crossing_scan_points = 48;

  double pinch_dim = 2;
  double pinch_r = 1.0;
  double pinch_alpha = 1.0;
  std::vector<double> pinch_epsilons{0.01, 0.02, 0.05};

  std::vector<double> theorem2_dims{2.0, 3.0};
  double theorem2_volume = 3.141592653589793;
  std::vector<double> theorem2_inner_radii{0.25, 0.5, 0.75};
  double theorem2_tol = 1e-8;
};

struct RunConfig {
  SuiteConfig suite;
  SolverConfig solver;
  std::string out_dir = "robin_out";
};

/// Parses a flat JSON object; the "tol" key sets the ODE tolerances.
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Sets both ODE tolerances; throws ConfigError unless tol is in (0, 1e-3].
void set_tolerance(SolverConfig& config, double tol);

/// all, theorem1, riccati, theorem2, asymptotics, crossing, pinch, bound.
const std::vector<std::string>& suite_names();

/// Reports of one suite (or every suite for "all"), ordered by check name.
std::vector<VerificationReport> run_suite(const std::string& suite, const RunConfig& config);

/// Shortest round-trip decimal form, independent of locale.
std::string format_double(double x);

/// Header plus rows, comma separated, LF line endings.
std::string csv_text(const Table& table);

/// JSON array of {check_name, parameters, claim, margin, passed, artifacts}.
std::string summary_json(const std::vector<VerificationReport>& reports);

/// Writes every table as <out_dir>/<name>.csv, records the file names in
/// each report's artifacts and writes <out_dir>/summary.json.
void write_artifacts(std::vector<VerificationReport>& reports, const std::filesystem::path& out_dir);

}  // namespace robin
