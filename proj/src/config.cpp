// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>

#include "birkhoff/errors.hpp"

namespace birkhoff {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0')
    throw usage_error("config key '" + key + "': expected a number, got '" + value + "'");
  return v;
}

long parse_long(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const long v = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0')
    throw usage_error("config key '" + key + "': expected an integer, got '" + value + "'");
  return v;
}

DebugPerturbation perturbation_from_string(const std::string& value) {
  if (value == "none") return DebugPerturbation::none;
  if (value == "skew") return DebugPerturbation::skew;
  if (value == "closure") return DebugPerturbation::closure;
  if (value == "scaled-d") return DebugPerturbation::scaled_d;
  throw usage_error("config key 'debug_perturbation': expected none|skew|closure|scaled-d, got '" +
                    value + "'");
}

}  // namespace

double RunConfig::effective_dt() const {
  if (dt > 0.0) return dt;
  return (kTwoPi / nx) / 2.0;
}

Grid RunConfig::make_grid() const {
  if (!(t_end > 0.0)) throw usage_error("config key 't_end': must be positive");
  if (nx < 1) throw usage_error("config key 'nx': must be positive");
  const double step = effective_dt();
  const int nt = std::max(1, static_cast<int>(std::lround(t_end / step)));
  return Grid(0.0, kTwoPi, nx, step, nt);
}

SchemeConfig RunConfig::scheme_config() const {
  SchemeConfig cfg;
  cfg.scheme = scheme;
  cfg.alpha = problem.alpha;
  cfg.beta = problem.beta;
  cfg.solver_tol = solver_tol;
  return cfg;
}

void apply_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "alpha") {
    cfg.problem.alpha = parse_double(key, value);
  } else if (key == "beta") {
    cfg.problem.beta = parse_double(key, value);
  } else if (key == "mode_k") {
    cfg.problem.mode_k = static_cast<int>(parse_long(key, value));
  } else if (key == "amplitude") {
    cfg.problem.amplitude = parse_double(key, value);
  } else if (key == "phase") {
    cfg.problem.phase = parse_double(key, value);
  } else if (key == "nx") {
    cfg.nx = static_cast<int>(parse_long(key, value));
  } else if (key == "dt") {
    cfg.dt = parse_double(key, value);
    if (!(cfg.dt > 0.0)) throw usage_error("config key 'dt': must be positive");
  } else if (key == "t_end") {
    cfg.t_end = parse_double(key, value);
  } else if (key == "scheme") {
    cfg.scheme = scheme_from_string(value);
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_long(key, value));
  } else if (key == "out_dir") {
    cfg.out_dir = value;
  } else if (key == "solver_tol") {
    cfg.solver_tol = parse_double(key, value);
  } else if (key == "check_tol") {
    cfg.check_tol = parse_double(key, value);
  } else if (key == "dissipation_tol") {
    cfg.dissipation_tol = parse_double(key, value);
  } else if (key == "levels") {
    cfg.levels = static_cast<int>(parse_long(key, value));
  } else if (key == "debug_perturbation") {
    cfg.debug = perturbation_from_string(value);
  } else {
    throw usage_error("unknown config key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open config file '" + path + "'");
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw usage_error("config line " + std::to_string(lineno) + ": expected key = value");
    apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

}  // namespace birkhoff
