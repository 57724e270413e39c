// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_CONFIG_HPP
#define BIRKHOFF_CONFIG_HPP

#include <cstdint>
#include <string>

#include "birkhoff/damped_wave.hpp"
#include "birkhoff/grid.hpp"
#include "birkhoff/scheme.hpp"

namespace birkhoff {

/// Debug hooks for seeding self-adjointness failures from the CLI.
enum class DebugPerturbation { none, skew, closure, scaled_d };

/// Full run configuration. The spatial domain is fixed to [0, 2pi).
struct RunConfig {
  DampedWaveProblem problem;
  Scheme scheme = Scheme::box;
  int nx = 64;
  double dt = 0.0;        // 0 means "use dx/2"
  double t_end = 1.0;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  double solver_tol = 1e-10;
  double check_tol = 1e-8;        // self-adjointness pass tolerance
  double dissipation_tol = 1e-10; // discrete dissipation pass tolerance
  int levels = 3;                 // refinement levels for `converge`
  DebugPerturbation debug = DebugPerturbation::none;

  double effective_dt() const;
  Grid make_grid() const;  // nt = round(t_end / dt); validates t_end > 0
  SchemeConfig scheme_config() const;
};

/// Parses a flat key = value file ('#' starts a comment). Unknown keys and
/// malformed values raise usage_error naming the offending key.
RunConfig parse_config_file(const std::string& path);

/// Applies one key = value assignment; shared by the file parser and the
/// command-line flag overrides.
void apply_key(RunConfig& cfg, const std::string& key, const std::string& value);

}  // namespace birkhoff

#endif
