// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/scheme.hpp"

#include "birkhoff/errors.hpp"

namespace birkhoff {

Scheme scheme_from_string(const std::string& s) {
  if (s == "box") return Scheme::box;
  if (s == "leapfrog") return Scheme::leapfrog;
  throw usage_error("scheme: expected 'box' or 'leapfrog', got '" + s + "'");
}

std::string to_string(Scheme s) { return s == Scheme::box ? "box" : "leapfrog"; }

void validate(const SchemeConfig& cfg) {
  if (!(cfg.solver_tol > 0.0)) throw usage_error("solver_tol must be positive");
  if (cfg.alpha < 0.0) throw usage_error("alpha must be non-negative");
}

}  // namespace birkhoff
