// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/simulate.hpp"

#include <cmath>
#include <string>

#include "birkhoff/box_scheme.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/leapfrog.hpp"

namespace birkhoff {

namespace {

std::vector<StateLevel> run_box_scheme(const SchemeConfig& cfg, const Grid& grid,
                                       const StateLevel& init) {
  BoxStepOperator op(cfg, grid.nx, grid.dt, grid.dx());
  std::vector<StateLevel> levels;
  levels.reserve(grid.nt + 1);
  levels.push_back(init);
  for (int j = 0; j < grid.nt; ++j) {
    try {
      levels.push_back(op.step(levels.back()));
    } catch (const divergence_error& e) {
      throw divergence_error(std::string(e.what()) + " (while stepping to level " +
                             std::to_string(j + 1) + ")");
    } catch (const solver_error& e) {
      throw solver_error(std::string(e.what()) + " (while stepping to level " +
                         std::to_string(j + 1) + ")");
    }
  }
  return levels;
}

std::vector<StateLevel> run_leapfrog_scheme(const SchemeConfig& cfg, const Grid& grid,
                                            const StateLevel& init,
                                            std::vector<std::string>* warnings) {
  const int nx = grid.nx;
  const double dt = grid.dt, dx = grid.dx();
  if (dt > dx && warnings)
    warnings->push_back("leapfrog CFL violation: dt > dx (dt = " + std::to_string(dt) +
                        ", dx = " + std::to_string(dx) + ")");

  // u history first; p, q are filled in a reconstruction pass
  std::vector<std::vector<double>> u(grid.nt + 1, std::vector<double>(nx, 0.0));
  for (int i = 0; i < nx; ++i) u[0][i] = init.z[i][0];

  if (grid.nt >= 1) {
    // second-order Taylor start from (u, p, q) at level 0
    for (int i = 0; i < nx; ++i) {
      const int im = (i + nx - 1) % nx;
      const int ip = (i + 1) % nx;
      const double lap = (u[0][ip] - 2 * u[0][i] + u[0][im]) / (dx * dx);
      const double ux = (u[0][ip] - u[0][im]) / (2 * dx);
      const double p0 = init.z[i][1];
      u[1][i] = u[0][i] + dt * p0 + dt * dt / 2 * (lap - u[0][i] - cfg.alpha * p0 - cfg.beta * ux);
    }
  }
  const double denom = 1.0 + cfg.alpha * dt / 2;
  for (int j = 1; j < grid.nt; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int im = (i + nx - 1) % nx;
      const int ip = (i + 1) % nx;
      const double lap = (u[j][ip] - 2 * u[j][i] + u[j][im]) / (dx * dx);
      const double ux = (u[j][ip] - u[j][im]) / (2 * dx);
      u[j + 1][i] =
          (2 * u[j][i] - (1.0 - cfg.alpha * dt / 2) * u[j - 1][i] + dt * dt * (lap - u[j][i] - cfg.beta * ux)) /
          denom;
      if (!std::isfinite(u[j + 1][i]))
        throw divergence_error("leapfrog produced non-finite state at level " + std::to_string(j + 1));
    }
  }

  std::vector<StateLevel> levels(grid.nt + 1);
  for (int j = 0; j <= grid.nt; ++j) {
    levels[j].j = j;
    levels[j].z.resize(nx);
    for (int i = 0; i < nx; ++i) {
      const int im = (i + nx - 1) % nx;
      const int ip = (i + 1) % nx;
      double p;
      if (j == 0) {
        p = init.z[i][1];
      } else if (j < grid.nt) {
        p = (u[j + 1][i] - u[j - 1][i]) / (2 * dt);
      } else if (j >= 2) {
        p = (3 * u[j][i] - 4 * u[j - 1][i] + u[j - 2][i]) / (2 * dt);
      } else {
        p = (u[j][i] - u[j - 1][i]) / dt;
      }
      const double q = (j == 0) ? init.z[i][2] : (u[j][ip] - u[j][im]) / (2 * dx);
      levels[j].z[i] = Node{u[j][i], p, q};
    }
  }
  return levels;
}

}  // namespace

std::vector<StateLevel> run_simulation(const SchemeConfig& cfg, const Grid& grid,
                                       const StateLevel& init,
                                       std::vector<std::string>* warnings) {
  validate(cfg);
  if (init.j != 0) throw usage_error("run_simulation: init.j must be 0");
  if (static_cast<int>(init.z.size()) != grid.nx)
    throw usage_error("run_simulation: init size does not match nx");
  if (grid.nt == 0) return {init};

  if (cfg.scheme == Scheme::box) return run_box_scheme(cfg, grid, init);
  return run_leapfrog_scheme(cfg, grid, init, warnings);
}

}  // namespace birkhoff
