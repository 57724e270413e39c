// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/monitor.hpp"

#include <cmath>

#include "birkhoff/box_scheme.hpp"
#include "birkhoff/errors.hpp"

namespace birkhoff {

double wedge_pu(const Node& U, const Node& V) { return U[1] * V[0] - U[0] * V[1]; }
double wedge_qu(const Node& U, const Node& V) { return U[2] * V[0] - U[0] * V[2]; }

namespace {

Node average(const Node& a, const Node& b) {
  return Node{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2, (a[2] + b[2]) / 2};
}

void check_alignment(const Grid& grid, const std::vector<StateLevel>& base,
                     const StateLevel& lvl, const char* what) {
  if (static_cast<int>(lvl.z.size()) != grid.nx)
    throw usage_error(std::string(what) + ": level size does not match nx");
  if (base.size() != static_cast<std::size_t>(grid.nt) + 1)
    throw usage_error(std::string(what) + ": base has wrong number of levels");
}

}  // namespace

TangentPair propagate_tangents(const SchemeConfig& cfg, const Grid& grid,
                               const std::vector<StateLevel>& base,
                               const StateLevel& dU0, const StateLevel& dV0) {
  check_alignment(grid, base, dU0, "propagate_tangents(dU0)");
  check_alignment(grid, base, dV0, "propagate_tangents(dV0)");
  // The shipped problems are linear, so the linearized step along any base
  // trajectory is the step operator itself.
  TangentPair pair;
  pair.U = run_simulation(cfg, grid, dU0);
  pair.V = run_simulation(cfg, grid, dV0);
  return pair;
}

FormSeries evaluate_forms(const BirkhoffSystem& sys, const Grid& grid,
                          const std::vector<StateLevel>& base,
                          const TangentPair& tangents) {
  if (tangents.U.size() != base.size() || tangents.V.size() != base.size())
    throw usage_error("evaluate_forms: tangents are not aligned with base");
  FormSeries out;
  out.nx = grid.nx;
  out.nt = grid.nt;
  out.omega_.resize(static_cast<std::size_t>(grid.nt + 1) * grid.nx);
  out.kappa_.resize(out.omega_.size());
  Vec z(3), u(3), v(3);
  for (int j = 0; j <= grid.nt; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      for (int c = 0; c < 3; ++c) {
        z[c] = base[j].z[i][c];
        u[c] = tangents.U[j].z[i][c];
        v[c] = tangents.V[j].z[i][c];
      }
      const StructureMatrices s = assemble_structure(sys, z, grid.x(i), grid.t(j));
      // pairwise wedge form: <MU,V> = sum_{a<b} M(a,b) (u_b v_a - u_a v_b),
      // which makes omega(U,U) = 0 and the U <-> V antisymmetry exact
      double om = 0.0, ka = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          const double wedge = u[b] * v[a] - u[a] * v[b];
          om += s.M(a, b) * wedge;
          ka += s.K(a, b) * wedge;
        }
      out.omega_[static_cast<std::size_t>(j) * grid.nx + i] = om;
      out.kappa_[static_cast<std::size_t>(j) * grid.nx + i] = ka;
    }
  }
  return out;
}

DissipationReport discrete_dissipation_residual(const SchemeConfig& cfg,
                                                const Grid& grid,
                                                const TangentPair& tangents) {
  const int nx = grid.nx, nt = grid.nt;
  const double dt = grid.dt, dx = grid.dx();
  const CellWeights w = cell_weights(cfg, dt, dx);

  DissipationReport rep;
  rep.per_level.assign(std::max(nt, 0), 0.0);
  rep.global_form.assign(nt + 1, 0.0);
  rep.global_unweighted.assign(nt + 1, 0.0);

  for (int j = 0; j <= nt; ++j) {
    CompensatedSum sum;
    for (int i = 0; i < nx; ++i) {
      const int ip = (i + 1) % nx;
      sum.add(wedge_pu(average(tangents.U[j].z[i], tangents.U[j].z[ip]),
                       average(tangents.V[j].z[i], tangents.V[j].z[ip])));
    }
    rep.global_unweighted[j] = sum.value();
    rep.global_form[j] = std::exp(cfg.alpha * grid.t(j)) * sum.value();
  }

  for (int j = 0; j < nt; ++j) {
    double rowmax = 0.0;
    const auto& Uj = tangents.U[j].z;
    const auto& Uj1 = tangents.U[j + 1].z;
    const auto& Vj = tangents.V[j].z;
    const auto& Vj1 = tangents.V[j + 1].z;
    for (int i = 0; i < nx; ++i) {
      const int ip = (i + 1) % nx;
      const double wt1 = wedge_pu(average(Uj1[i], Uj1[ip]), average(Vj1[i], Vj1[ip]));
      const double wt0 = wedge_pu(average(Uj[i], Uj[ip]), average(Vj[i], Vj[ip]));
      const double wx1 = wedge_qu(average(Uj[ip], Uj1[ip]), average(Vj[ip], Vj1[ip]));
      const double wx0 = wedge_qu(average(Uj[i], Uj1[i]), average(Vj[i], Vj1[i]));
      const double r = (w.at * wt1 - w.bt * wt0) / dt - (w.cx * wx1 - w.dx_ * wx0) / dx;
      rowmax = std::max(rowmax, std::abs(r));
    }
    rep.per_level[j] = rowmax;
    rep.max_residual = std::max(rep.max_residual, rowmax);
  }
  return rep;
}

double continuous_dissipation_check(const BirkhoffSystem& sys,
                                    const std::vector<RefinedRun>& runs) {
  if (runs.size() < 3)
    throw usage_error("continuous_dissipation_check: need at least 3 refinement levels");

  std::vector<double> residuals, spacings;
  for (const RefinedRun& run : runs) {
    const FormSeries forms = evaluate_forms(sys, run.grid, run.base, run.tangents);
    const int nx = run.grid.nx, nt = run.grid.nt;
    const double dt = run.grid.dt, dx = run.grid.dx();
    double worst = 0.0;
    for (int j = 1; j < nt; ++j)
      for (int i = 0; i < nx; ++i) {
        const int ip = (i + 1) % nx;
        const int im = (i + nx - 1) % nx;
        const double r = (forms.omega(i, j + 1) - forms.omega(i, j - 1)) / (2 * dt) +
                         (forms.kappa(ip, j) - forms.kappa(im, j)) / (2 * dx);
        worst = std::max(worst, std::abs(r));
      }
    residuals.push_back(worst);
    spacings.push_back(dx);
  }

  CompensatedSum orders;
  for (std::size_t l = 0; l + 1 < runs.size(); ++l)
    orders.add(std::log(residuals[l] / residuals[l + 1]) /
               std::log(spacings[l] / spacings[l + 1]));
  return orders.value() / static_cast<double>(runs.size() - 1);
}

double discrete_pfaffian_action(const BirkhoffSystem& sys, const Grid& grid,
                                const std::vector<StateLevel>& field) {
  if (field.size() != static_cast<std::size_t>(grid.nt) + 1)
    throw usage_error("discrete_pfaffian_action: field has wrong number of levels");
  const double dt = grid.dt, dx = grid.dx();
  CompensatedSum total;
  Vec zbar(3), ztq(3), zxq(3);
  for (int j = 0; j < grid.nt; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const int ip = (i + 1) % grid.nx;
      const Node& z00 = field[j].z[i];
      const Node& z10 = field[j].z[ip];
      const Node& z01 = field[j + 1].z[i];
      const Node& z11 = field[j + 1].z[ip];
      for (int c = 0; c < 3; ++c) {
        zbar[c] = (z00[c] + z10[c] + z01[c] + z11[c]) / 4;
        ztq[c] = ((z01[c] + z11[c]) / 2 - (z00[c] + z10[c]) / 2) / dt;
        zxq[c] = ((z10[c] + z11[c]) / 2 - (z00[c] + z01[c]) / 2) / dx;
      }
      const double xb = grid.x(i) + dx / 2;
      const double tb = grid.t(j) + dt / 2;
      const Vec F = sys.F(zbar, xb, tb);
      const Vec G = sys.G(zbar, xb, tb);
      double dens = -sys.B(zbar, xb, tb);
      for (int c = 0; c < 3; ++c) dens += F[c] * ztq[c] + G[c] * zxq[c];
      total.add(dt * dx * dens);
    }
  }
  return total.value();
}

Vec discrete_el_residual(const BirkhoffSystem& sys, const Grid& grid,
                         const std::vector<StateLevel>& field, int i, int j) {
  if (j < 1 || j > grid.nt - 1)
    throw usage_error("discrete_el_residual: node must be interior in time");
  const double dt = grid.dt, dx = grid.dx();
  const int nx = grid.nx;
  Vec g(3, 0.0);
  Vec zbar(3), ztq(3), zxq(3);
  // the four boxes touching node (i, j); (bi, bj) is the lower-left corner
  for (int ci = 0; ci <= 1; ++ci) {
    for (int cj = 0; cj <= 1; ++cj) {
      const int bi = (i - ci + nx) % nx;
      const int bj = j - cj;
      const int bip = (bi + 1) % nx;
      const Node& z00 = field[bj].z[bi];
      const Node& z10 = field[bj].z[bip];
      const Node& z01 = field[bj + 1].z[bi];
      const Node& z11 = field[bj + 1].z[bip];
      for (int c = 0; c < 3; ++c) {
        zbar[c] = (z00[c] + z10[c] + z01[c] + z11[c]) / 4;
        ztq[c] = ((z01[c] + z11[c]) / 2 - (z00[c] + z10[c]) / 2) / dt;
        zxq[c] = ((z10[c] + z11[c]) / 2 - (z00[c] + z01[c]) / 2) / dx;
      }
      const double xb = grid.x(bi) + dx / 2;
      const double tb = grid.t(bj) + dt / 2;
      const Matrix JF = sys.jacobians ? sys.jacobians->dF_dz(zbar, xb, tb)
                                      : fd_jacobian_z(sys.F, 3, zbar, xb, tb);
      const Matrix JG = sys.jacobians ? sys.jacobians->dG_dz(zbar, xb, tb)
                                      : fd_jacobian_z(sys.G, 3, zbar, xb, tb);
      const Vec gradB = sys.jacobians ? sys.jacobians->dB_dz(zbar, xb, tb)
                                      : fd_grad_z(sys.B, zbar, xb, tb);
      const Vec F = sys.F(zbar, xb, tb);
      const Vec G = sys.G(zbar, xb, tb);
      const double st = (cj == 1) ? 1.0 : -1.0;  // node on the box's upper/lower level
      const double sx = (ci == 1) ? 1.0 : -1.0;  // node on the box's right/left edge
      for (int mu = 0; mu < 3; ++mu) {
        double acc = -gradB[mu] / 4;
        for (int nu = 0; nu < 3; ++nu) acc += (JF(nu, mu) * ztq[nu] + JG(nu, mu) * zxq[nu]) / 4;
        acc += st * F[mu] / (2 * dt) + sx * G[mu] / (2 * dx);
        g[mu] += acc;
      }
    }
  }
  return g;
}

StateLevel random_tangent_level(const Grid& grid, SplitMix64& rng) {
  StateLevel lvl = zero_level(grid);
  for (int m = 1; m <= 4; ++m) {
    const double au = rng.uniform(-1.0, 1.0);
    const double bu = rng.uniform(-1.0, 1.0);
    const double ap = rng.uniform(-1.0, 1.0);
    const double bp = rng.uniform(-1.0, 1.0);
    for (int i = 0; i < grid.nx; ++i) {
      const double xi = grid.x(i);
      lvl.z[i][0] += au * std::cos(m * xi) + bu * std::sin(m * xi);
      lvl.z[i][1] += ap * std::cos(m * xi) + bp * std::sin(m * xi);
      lvl.z[i][2] += m * (-au * std::sin(m * xi) + bu * std::cos(m * xi));
    }
  }
  return lvl;
}

}  // namespace birkhoff
