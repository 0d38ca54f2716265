#include "robin/suite.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace robin {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

double number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError("config key '" + key + "' must be finite");
  return x;
}

double positive(const json& v, const std::string& key) {
  const double x = number(v, key);
  if (!(x > 0.0)) throw ConfigError("config key '" + key + "' must be > 0");
  return x;
}

double integer(const json& v, const std::string& key, double lo) {
  const double x = number(v, key);
  if (x != std::floor(x) || x < lo)
    throw ConfigError("config key '" + key + "' must be an integer >= " + format_double(lo));
  return x;
}

std::vector<double> grid(const json& v, const std::string& key, bool sorted = true) {
  if (!v.is_array() || v.empty()) throw ConfigError("config key '" + key + "' must be a non-empty array");
  std::vector<double> out;
  for (const auto& e : v) out.push_back(number(e, key));
  if (sorted)
    for (std::size_t i = 1; i < out.size(); ++i)
      if (!(out[i] > out[i - 1])) throw ConfigError("config key '" + key + "' must be strictly increasing");
  return out;
}

std::vector<double> positive_grid(const json& v, const std::string& key) {
  auto g = grid(v, key);
  if (!(g.front() > 0.0)) throw ConfigError("config key '" + key + "' must hold positive values");
  return g;
}

using Setter = std::function<void(RunConfig&, const json&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"out", [](RunConfig& c, const json& v, const std::string& k) {
         if (!v.is_string() || v.get<std::string>().empty())
           throw ConfigError("config key '" + k + "' must be a non-empty string");
         c.out_dir = v.get<std::string>();
       }},
      {"tol", [](RunConfig& c, const json& v, const std::string& k) { set_tolerance(c.solver, number(v, k)); }},
      {"theorem1_r1", [](RunConfig& c, const json& v, const std::string& k) { c.suite.theorem1_r1 = positive(v, k); }},
      {"theorem1_alphas", [](RunConfig& c, const json& v, const std::string& k) { c.suite.theorem1_alphas = positive_grid(v, k); }},
      {"theorem1_r2_grid", [](RunConfig& c, const json& v, const std::string& k) { c.suite.theorem1_r2_grid = positive_grid(v, k); }},
      {"fd_step", [](RunConfig& c, const json& v, const std::string& k) { c.suite.fd_step = positive(v, k); }},
      {"fd_tolerance", [](RunConfig& c, const json& v, const std::string& k) { c.suite.fd_tolerance = positive(v, k); }},
      {"riccati_tol", [](RunConfig& c, const json& v, const std::string& k) { c.suite.riccati_tol = positive(v, k); }},
      {"bound_r1", [](RunConfig& c, const json& v, const std::string& k) { c.suite.bound_r1 = positive(v, k); }},
      {"bound_r2_grid", [](RunConfig& c, const json& v, const std::string& k) { c.suite.bound_r2_grid = positive_grid(v, k); }},
      {"bound_ball_dims", [](RunConfig& c, const json& v, const std::string& k) {
         auto g = grid(v, k);
         for (const auto& e : v) integer(e, k, 2);
         c.suite.bound_ball_dims = g;
       }},
      {"bound_alphas", [](RunConfig& c, const json& v, const std::string& k) { c.suite.bound_alphas = positive_grid(v, k); }},
      {"asymptotics_ball_radius", [](RunConfig& c, const json& v, const std::string& k) { c.suite.asymptotics_ball_radius = positive(v, k); }},
      {"asymptotics_annulus", [](RunConfig& c, const json& v, const std::string& k) {
         auto g = positive_grid(v, k);
         if (g.size() != 2) throw ConfigError("config key '" + k + "' must be [r1, r2]");
         c.suite.asymptotics_annulus = g;
       }},
      {"asymptotics_alphas", [](RunConfig& c, const json& v, const std::string& k) { c.suite.asymptotics_alphas = positive_grid(v, k); }},
      {"asymptotics_shrink", [](RunConfig& c, const json& v, const std::string& k) { c.suite.asymptotics_shrink = positive(v, k); }},
      {"crossing_volume", [](RunConfig& c, const json& v, const std::string& k) { c.suite.crossing_volume = positive(v, k); }},
      {"crossing_r1", [](RunConfig& c, const json& v, const std::string& k) { c.suite.crossing_r1 = positive(v, k); }},
      {"crossing_alpha_window", [](RunConfig& c, const json& v, const std::string& k) {
         auto g = positive_grid(v, k);
         if (g.size() != 2) throw ConfigError("config key '" + k + "' must be [lo, hi]");
         c.suite.crossing_alpha_window = g;
       }},
      {"crossing_scan_points", [](RunConfig& c, const json& v, const std::string& k) { c.suite.crossing_scan_points = integer(v, k, 2); }},
      {"pinch_dim", [](RunConfig& c, const json& v, const std::string& k) { c.suite.pinch_dim = integer(v, k, 2); }},
      {"pinch_r", [](RunConfig& c, const json& v, const std::string& k) { c.suite.pinch_r = positive(v, k); }},
      {"pinch_alpha", [](RunConfig& c, const json& v, const std::string& k) { c.suite.pinch_alpha = positive(v, k); }},
      {"pinch_epsilons", [](RunConfig& c, const json& v, const std::string& k) { c.suite.pinch_epsilons = positive_grid(v, k); }},
      {"theorem2_dims", [](RunConfig& c, const json& v, const std::string& k) {
         auto g = grid(v, k);
         for (const auto& e : v) integer(e, k, 2);
         c.suite.theorem2_dims = g;
       }},
      {"theorem2_volume", [](RunConfig& c, const json& v, const std::string& k) { c.suite.theorem2_volume = positive(v, k); }},
      {"theorem2_inner_radii", [](RunConfig& c, const json& v, const std::string& k) { c.suite.theorem2_inner_radii = positive_grid(v, k); }},
      {"theorem2_tol", [](RunConfig& c, const json& v, const std::string& k) { c.suite.theorem2_tol = positive(v, k); }},
  };
  return table;
}

void validate(const RunConfig& c) {
  const auto& s = c.suite;
  if (!(s.theorem1_r2_grid.front() > s.theorem1_r1))
    throw ConfigError("theorem1_r2_grid must lie above theorem1_r1");
  if (!(s.bound_r2_grid.front() > s.bound_r1)) throw ConfigError("bound_r2_grid must lie above bound_r1");
  if (!(s.asymptotics_alphas.back() >= s.asymptotics_shrink * s.asymptotics_alphas.front()))
    throw ConfigError("asymptotics_alphas must span at least asymptotics_shrink");
  if (!(s.pinch_epsilons.back() < s.pinch_r)) throw ConfigError("pinch_epsilons must lie below pinch_r");
  if (!(s.asymptotics_shrink >= 1.0)) throw ConfigError("asymptotics_shrink must be >= 1");
}

std::vector<RobinProblem> bound_problems(const SuiteConfig& s) {
  std::vector<RobinProblem> out;
  for (double r2 : s.bound_r2_grid)
    for (double a : s.bound_alphas) out.emplace_back(DomainSpec::annulus(2, s.bound_r1, r2), a);
  for (double d : s.bound_ball_dims)
    for (double a : s.bound_alphas) out.emplace_back(DomainSpec::ball(static_cast<int>(d), 1.0), a);
  return out;
}

std::vector<VerificationReport> run_one(const std::string& name, const RunConfig& c) {
  const auto& s = c.suite;
  const auto& cfg = c.solver;
  if (name == "theorem1")
    return {verify_theorem1(s.theorem1_r1, s.theorem1_alphas, s.theorem1_r2_grid, s.fd_step, s.fd_tolerance, cfg)};
  if (name == "riccati")
    return {verify_riccati(s.theorem1_r1, s.theorem1_alphas, s.theorem1_r2_grid, s.riccati_tol, cfg)};
  if (name == "bound") return {verify_negativity_bound(bound_problems(s), cfg)};
  if (name == "asymptotics") {
    const auto ball = DomainSpec::ball(2, s.asymptotics_ball_radius);
    const auto annulus = DomainSpec::annulus(2, s.asymptotics_annulus[0], s.asymptotics_annulus[1]);
    return {verify_asymptotics(ball, s.asymptotics_alphas, s.asymptotics_shrink, cfg),
            verify_asymptotics(annulus, s.asymptotics_alphas, s.asymptotics_shrink, cfg)};
  }
  if (name == "crossing") {
    CrossingOptions opt;
    opt.scan_points = static_cast<std::size_t>(s.crossing_scan_points);
    return {crossing_search(s.crossing_volume, s.crossing_r1, s.crossing_alpha_window[0],
                            s.crossing_alpha_window[1], opt, cfg)};
  }
  if (name == "pinch")
    return {pinch_check(static_cast<int>(s.pinch_dim), s.pinch_r, s.pinch_alpha, s.pinch_epsilons, cfg)};
  if (name == "theorem2") {
    std::vector<VerificationReport> out;
    for (double d : s.theorem2_dims)
      out.push_back(verify_theorem2_radial(static_cast<int>(d), s.theorem2_volume, s.theorem2_inner_radii,
                                           s.theorem2_tol, cfg));
    return out;
  }
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace

void set_tolerance(SolverConfig& config, double tol) {
  if (!(tol > 0.0 && tol <= 1e-3)) throw ConfigError("tolerance must lie in (0, 1e-3]");
  config.ode.abs = tol;
  config.ode.rel = tol;
}

RunConfig parse_run_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  const auto& table = setters();
  for (const auto& [key, value] : doc.items()) {
    const auto it = table.find(key);
    if (it == table.end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(c, value, key);
  }
  validate(c);
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",         "theorem1", "riccati", "theorem2",
                                                 "asymptotics", "crossing", "pinch",   "bound"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& suite, const RunConfig& config) {
  std::vector<VerificationReport> out;
  if (suite == "all") {
    for (const auto& name : suite_names())
      if (name != "all")
        for (auto& r : run_one(name, config)) out.push_back(std::move(r));
  } else {
    out = run_one(suite, config);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.check_name < b.check_name; });
  return out;
}

std::string format_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_text(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string summary_json(const std::vector<VerificationReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.parameters) {
      if (v.size() == 1) params[k] = v.front();
      else params[k] = v;
    }
    ordered_json item;
    item["check_name"] = r.check_name;
    item["parameters"] = params;
    item["claim"] = r.claim;
    // Non-finite margins have no JSON number form.
    if (std::isfinite(r.margin)) item["margin"] = r.margin;
    else item["margin"] = format_double(r.margin);
    item["passed"] = r.passed;
    item["artifacts"] = r.artifacts;
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

void write_artifacts(std::vector<VerificationReport>& reports, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream f(out_dir / name, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + (out_dir / name).string() + "'");
    f << text;
  };
  for (auto& r : reports) {
    r.artifacts.clear();
    for (const auto& t : r.tables) {
      const std::string name = t.name + ".csv";
      write(name, csv_text(t));
      r.artifacts.push_back(name);
    }
  }
  write("summary.json", summary_json(reports));
}

}  // namespace robin
