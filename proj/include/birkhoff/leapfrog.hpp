// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_LEAPFROG_HPP
#define BIRKHOFF_LEAPFROG_HPP

#include <string>
#include <vector>

#include "birkhoff/grid.hpp"
#include "birkhoff/scheme.hpp"

namespace birkhoff {

/// Explicit central-difference comparator for the damped wave equation:
///
///   u_{i,j+1} = [2 u_{i,j} - (1 - alpha dt/2) u_{i,j-1}
///                + dt^2 (D+D- u - u - beta D0 u)_{i,j}] / (1 + alpha dt/2).
///
/// p and q of the returned level are reconstructed by second-order one-sided
/// (in t) and central (in x) differences. A CFL violation (dt > dx) appends a
/// warning instead of failing.
StateLevel step_leapfrog(const SchemeConfig& cfg, const Grid& grid,
                         const StateLevel& prev, const StateLevel& curr,
                         std::vector<std::string>* warnings = nullptr);

}  // namespace birkhoff

#endif
