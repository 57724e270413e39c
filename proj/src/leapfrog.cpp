// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/leapfrog.hpp"

#include <cmath>

#include "birkhoff/errors.hpp"

namespace birkhoff {

StateLevel step_leapfrog(const SchemeConfig& cfg, const Grid& grid,
                         const StateLevel& prev, const StateLevel& curr,
                         std::vector<std::string>* warnings) {
  validate(cfg);
  const int nx = grid.nx;
  if (static_cast<int>(prev.z.size()) != nx || static_cast<int>(curr.z.size()) != nx)
    throw usage_error("step_leapfrog: level size does not match nx");
  if (curr.j != prev.j + 1) throw usage_error("step_leapfrog: levels must be consecutive");

  const double dt = grid.dt, dx = grid.dx();
  if (dt > dx && warnings)
    warnings->push_back("leapfrog CFL violation: dt > dx (dt = " + std::to_string(dt) +
                        ", dx = " + std::to_string(dx) + ")");

  const double denom = 1.0 + cfg.alpha * dt / 2;
  StateLevel next;
  next.j = curr.j + 1;
  next.z.resize(curr.z.size());
  for (int i = 0; i < nx; ++i) {
    const int im = (i + nx - 1) % nx;
    const int ip = (i + 1) % nx;
    const double u = curr.z[i][0];
    const double lap = (curr.z[ip][0] - 2 * u + curr.z[im][0]) / (dx * dx);
    const double ux = (curr.z[ip][0] - curr.z[im][0]) / (2 * dx);
    const double unew =
        (2 * u - (1.0 - cfg.alpha * dt / 2) * prev.z[i][0] + dt * dt * (lap - u - cfg.beta * ux)) /
        denom;
    if (!std::isfinite(unew))
      throw divergence_error("leapfrog produced non-finite state at level " +
                             std::to_string(next.j));
    next.z[i][0] = unew;
  }
  // p backward second order in t, q central in x
  for (int i = 0; i < nx; ++i) {
    const int im = (i + nx - 1) % nx;
    const int ip = (i + 1) % nx;
    next.z[i][1] = (3 * next.z[i][0] - 4 * curr.z[i][0] + prev.z[i][0]) / (2 * dt);
    next.z[i][2] = (next.z[ip][0] - next.z[im][0]) / (2 * dx);
  }
  return next;
}

}  // namespace birkhoff
