// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/grid.hpp"

#include "birkhoff/errors.hpp"

namespace birkhoff {

Grid::Grid(double x0_, double x1_, int nx_, double dt_, int nt_)
    : x0(x0_), x1(x1_), nx(nx_), dt(dt_), nt(nt_) {
  if (nx < 1) throw usage_error("Grid: nx must be positive");
  if (!(x1 > x0)) throw usage_error("Grid: x1 must exceed x0");
  if (!(dt > 0.0)) throw usage_error("Grid: dt must be positive");
  if (nt < 0) throw usage_error("Grid: nt must be non-negative");
}

StateLevel zero_level(const Grid& grid, int j) {
  StateLevel lvl;
  lvl.j = j;
  lvl.z.assign(static_cast<std::size_t>(grid.nx), Node{0.0, 0.0, 0.0});
  return lvl;
}

}  // namespace birkhoff
