// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_DAMPED_WAVE_HPP
#define BIRKHOFF_DAMPED_WAVE_HPP

#include <utility>
#include <vector>

#include "birkhoff/grid.hpp"
#include "birkhoff/scheme.hpp"
#include "birkhoff/system.hpp"

namespace birkhoff {

/// The damped wave family u_tt - u_xx + u + alpha u_t + beta u_x = 0 on
/// [0, 2pi) with standing-wave data u(x, 0) = A cos(k x + ...) of integer
/// wavenumber k.
struct DampedWaveProblem {
  double alpha = 2.0;   // >= 0
  double beta = 0.0;
  int mode_k = 1;       // >= 1
  double amplitude = 1.0;
  double phase = 0.0;
};

void validate(const DampedWaveProblem& prob);

/// The n = 3 Birkhoffian representation with z = (u, p, q), E = e^{alpha t - beta x}:
///   F = (-E p / 2,  E u / 2,  0),
///   G = ( E q / 2,  0,       -E u / 2),
///   B = -E [u^2 + p^2 - q^2 + alpha u p + beta u q] / 2,
/// with analytic Jacobians attached.
BirkhoffSystem as_birkhoff_system(const DampedWaveProblem& prob);

/// Exact standing wave for beta = 0:
///   u = A e^{-alpha t/2} cos(k x) cos(Omega t + phi),
///   Omega = sqrt(1 + k^2 - alpha^2/4), p = u_t, q = u_x.
/// Throws unsupported_problem for beta != 0 or alpha^2 >= 4(1 + k^2).
Node exact_solution(const DampedWaveProblem& prob, double x, double t);

/// Samples the standing-wave profile at t = 0 on the grid nodes. Throws
/// usage_error when the grid does not span an integer number of mode periods.
StateLevel initial_level(const DampedWaveProblem& prob, const Grid& grid);

/// Discrete L2 error of u against the exact solution at the level's time:
/// sqrt(dx * sum_i (u_i - u_exact(x_i, t_j))^2). Requires beta = 0.
double error_norm(const Grid& grid, const StateLevel& numeric,
                  const DampedWaveProblem& prob);

struct ConvergenceRow {
  double dx = 0.0;
  double dt = 0.0;
  double l2_error = 0.0;
  double observed_order = 0.0;  // NaN on the first row or when undefined
};

/// Runs the scheme on each (nx, dt) refinement to t = nt*dt with
/// nt = round(t_end/dt), and reports errors and pairwise observed orders.
/// Requires beta = 0 and at least 3 levels.
std::vector<ConvergenceRow> convergence_study(const DampedWaveProblem& prob,
                                              const SchemeConfig& cfg,
                                              const std::vector<std::pair<int, double>>& refinements,
                                              double t_end);

}  // namespace birkhoff

#endif
