// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_GRID_HPP
#define BIRKHOFF_GRID_HPP

#include <array>
#include <vector>

namespace birkhoff {

/// Uniform space-time lattice, periodic in x: node i = nx wraps to 0.
/// Node coordinates x_i = x0 + i*dx, t_j = j*dt.
struct Grid {
  double x0 = 0.0;
  double x1 = 0.0;
  int nx = 0;
  double dt = 0.0;
  int nt = 0;

  Grid() = default;
  Grid(double x0_, double x1_, int nx_, double dt_, int nt_);

  double dx() const { return (x1 - x0) / nx; }
  double x(int i) const { return x0 + i * dx(); }
  double t(int j) const { return j * dt; }
};

using Node = std::array<double, 3>;  // (u, p, q)

/// Node values of one time level.
struct StateLevel {
  int j = 0;
  std::vector<Node> z;
};

StateLevel zero_level(const Grid& grid, int j = 0);

}  // namespace birkhoff

#endif
