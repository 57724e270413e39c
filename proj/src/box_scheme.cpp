// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/box_scheme.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "birkhoff/errors.hpp"

namespace birkhoff {

namespace {

using Block = std::array<std::array<double, 3>, 3>;

struct CellBlocks {
  Block P;   // coefficients of the level-(j+1) value at node i
  Block Q;   // coefficients of the level-(j+1) value at node i+1
  Block Pr;  // rhs contribution of the level-j value at node i
  Block Qr;  // rhs contribution of the level-j value at node i+1
};

// Rows: the q-difference equation, the u_t = p equation, the u_x = q
// equation. Columns: (u, p, q).
CellBlocks cell_blocks(const SchemeConfig& cfg, double dt, double dx) {
  const CellWeights w = cell_weights(cfg, dt, dx);
  const double at = w.at, bt = w.bt, cx = w.cx, dxw = w.dx_;
  CellBlocks b{};
  b.P = {{{0.25, at / (2 * dt), dxw / (2 * dx)},
          {1 / (2 * dt), -at / 4, 0.0},
          {-1 / (2 * dx), 0.0, -dxw / 4}}};
  b.Q = {{{0.25, at / (2 * dt), -cx / (2 * dx)},
          {1 / (2 * dt), -at / 4, 0.0},
          {1 / (2 * dx), 0.0, -cx / 4}}};
  b.Pr = {{{-0.25, bt / (2 * dt), -dxw / (2 * dx)},
           {1 / (2 * dt), bt / 4, 0.0},
           {1 / (2 * dx), 0.0, dxw / 4}}};
  b.Qr = {{{-0.25, bt / (2 * dt), cx / (2 * dx)},
           {1 / (2 * dt), bt / 4, 0.0},
           {-1 / (2 * dx), 0.0, cx / 4}}};
  return b;
}

bool needs_closure(int nx) { return nx % 2 == 0; }

// Scale of the rank-one closure row; any O(||A||) value works.
double closure_gamma(double dt) { return 1.0 / (2.0 * std::abs(dt)); }

}  // namespace

CellWeights cell_weights(const SchemeConfig& cfg, double dt, double dx) {
  return CellWeights{std::exp(cfg.alpha * dt / 2), std::exp(-cfg.alpha * dt / 2),
                     std::exp(-cfg.beta * dx / 2), std::exp(cfg.beta * dx / 2)};
}

BoxStepOperator::BoxStepOperator(const SchemeConfig& cfg, int nx, double dt, double dx)
    : cfg_(cfg), nx_(nx), dt_(dt), dx_(dx) {
  validate(cfg);
  if (nx < 1) throw usage_error("BoxStepOperator: nx must be positive");
  const CellBlocks b = cell_blocks(cfg, dt, dx);

  const std::size_t n = static_cast<std::size_t>(3 * nx);
  A_ = Matrix(n, n);
  for (int i = 0; i < nx; ++i) {
    const int ip = (i + 1) % nx;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        A_(3 * i + r, 3 * i + c) += b.P[r][c];
        A_(3 * i + r, 3 * ip + c) += b.Q[r][c];
      }
  }
  if (needs_closure(nx)) {
    const double g = closure_gamma(dt);
    for (int i = 0; i < nx; ++i)
      for (int k = 0; k < nx; ++k) {
        const double sgn = ((i + k) % 2 == 0) ? 1.0 : -1.0;
        A_(3 * i + 1, 3 * k + 1) += g * sgn / nx;
      }
  }

  try {
    lu_ = std::make_unique<LuFactor>(A_);
  } catch (const solver_error&) {
    std::ostringstream msg;
    msg << "box step matrix is singular for dt = " << dt << ", dx = " << dx;
    throw solver_error(msg.str());
  }
}

Vec BoxStepOperator::rhs(const StateLevel& level) const {
  if (static_cast<int>(level.z.size()) != nx_)
    throw usage_error("BoxStepOperator: level size does not match nx");
  const CellBlocks blk = cell_blocks(cfg_, dt_, dx_);
  Vec b(static_cast<std::size_t>(3 * nx_), 0.0);
  for (int i = 0; i < nx_; ++i) {
    const Node& zi = level.z[i];
    const Node& zp = level.z[(i + 1) % nx_];
    for (int r = 0; r < 3; ++r) {
      double acc = 0.0;
      for (int c = 0; c < 3; ++c) acc += blk.Pr[r][c] * zi[c] + blk.Qr[r][c] * zp[c];
      b[3 * i + r] = acc;
    }
  }
  if (needs_closure(nx_)) {
    const double g = closure_gamma(dt_);
    CompensatedSum cb;  // checkerboard component of p at level j
    for (int k = 0; k < nx_; ++k) cb.add((k % 2 == 0 ? 1.0 : -1.0) * level.z[k][1]);
    const double target = std::exp(-cfg_.alpha * dt_) * cb.value();
    for (int i = 0; i < nx_; ++i) {
      const double sgn = (i % 2 == 0) ? 1.0 : -1.0;
      b[3 * i + 1] += g * target * sgn / nx_;
    }
  }
  return b;
}

StateLevel BoxStepOperator::step(const StateLevel& level) const {
  const Vec sol = lu_->solve(rhs(level));
  StateLevel next;
  next.j = level.j + 1;
  next.z.resize(level.z.size());
  for (int i = 0; i < nx_; ++i)
    next.z[i] = Node{sol[3 * i + 0], sol[3 * i + 1], sol[3 * i + 2]};

  for (const Node& nd : next.z)
    for (double v : nd)
      if (!std::isfinite(v))
        throw divergence_error("non-finite state after step to level " + std::to_string(next.j));

  const double res = max_cell_residual(cfg_, nx_, dt_, dx_, level, next);
  if (!(res <= cfg_.solver_tol)) {
    std::ostringstream msg;
    msg << "box step residual " << res << " exceeds solver_tol " << cfg_.solver_tol
        << " (dt = " << dt_ << ", dx = " << dx_ << ")";
    throw solver_error(msg.str());
  }
  return next;
}

StateLevel step_box(const SchemeConfig& cfg, const Grid& grid, const StateLevel& level) {
  if (level.j >= grid.nt) throw usage_error("step_box: level.j must be below grid.nt");
  return BoxStepOperator(cfg, grid.nx, grid.dt, grid.dx()).step(level);
}

StepSystem assemble_step_system(const SchemeConfig& cfg, const Grid& grid,
                                const StateLevel& level) {
  BoxStepOperator op(cfg, grid.nx, grid.dt, grid.dx());
  return StepSystem{op.matrix(), op.rhs(level)};
}

double max_cell_residual(const SchemeConfig& cfg, int nx, double dt, double dx,
                         const StateLevel& from, const StateLevel& to) {
  const CellWeights w = cell_weights(cfg, dt, dx);
  double worst = 0.0;
  for (int i = 0; i < nx; ++i) {
    const int ip = (i + 1) % nx;
    const auto& [u00, p00, q00] = from.z[i];
    const auto& [u10, p10, q10] = from.z[ip];
    const auto& [u01, p01, q01] = to.z[i];
    const auto& [u11, p11, q11] = to.z[ip];
    const double e1 = (w.at * (p01 + p11) / 2 - w.bt * (p00 + p10) / 2) / dt -
                      (w.cx * (q10 + q11) / 2 - w.dx_ * (q00 + q01) / 2) / dx +
                      (u00 + u10 + u01 + u11) / 4;
    const double e2 = ((u01 + u11) / 2 - (u00 + u10) / 2) / dt -
                      (w.at * (p01 + p11) + w.bt * (p00 + p10)) / 4;
    const double e3 = ((u10 + u11) / 2 - (u00 + u01) / 2) / dx -
                      (w.cx * (q10 + q11) + w.dx_ * (q00 + q01)) / 4;
    worst = std::max({worst, std::abs(e1), std::abs(e2), std::abs(e3)});
  }
  return worst;
}

}  // namespace birkhoff
