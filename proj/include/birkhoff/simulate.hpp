// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_SIMULATE_HPP
#define BIRKHOFF_SIMULATE_HPP

#include <string>
#include <vector>

#include "birkhoff/grid.hpp"
#include "birkhoff/scheme.hpp"

namespace birkhoff {

/// Runs nt steps of the configured scheme from the level-0 state and returns
/// all nt+1 levels. Deterministic: identical inputs give bit-identical
/// output. The box scheme factors its step matrix once. The leapfrog
/// bootstraps level 1 by a second-order Taylor start and reconstructs p, q
/// by central differences (level 0 keeps the initial data; the last level
/// uses a one-sided second-order stencil). Step failures are rethrown with
/// the failing time index.
std::vector<StateLevel> run_simulation(const SchemeConfig& cfg, const Grid& grid,
                                       const StateLevel& init,
                                       std::vector<std::string>* warnings = nullptr);

}  // namespace birkhoff

#endif
