// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_MONITOR_HPP
#define BIRKHOFF_MONITOR_HPP

#include <vector>

#include "birkhoff/grid.hpp"
#include "birkhoff/rng.hpp"
#include "birkhoff/scheme.hpp"
#include "birkhoff/simulate.hpp"
#include "birkhoff/system.hpp"

namespace birkhoff {

/// Two variational (linearized) solution fields along a base trajectory.
struct TangentPair {
  std::vector<StateLevel> U;
  std::vector<StateLevel> V;
};

/// Pointwise values of the two-forms on a tangent pair:
///   omega_{i,j} = <M_{i,j} U_{i,j}, V_{i,j}>,
///   kappa_{i,j} = <K_{i,j} U_{i,j}, V_{i,j}>.
struct FormSeries {
  int nx = 0;
  int nt = 0;
  std::vector<double> omega_;  // (nt+1) * nx, row j then i
  std::vector<double> kappa_;

  double omega(int i, int j) const { return omega_[static_cast<std::size_t>(j) * nx + i]; }
  double kappa(int i, int j) const { return kappa_[static_cast<std::size_t>(j) * nx + i]; }
};

struct DissipationReport {
  /// Max over all interior boxes of the discrete dissipation residual.
  double max_residual = 0.0;
  /// Per box-row maxima, entry j covers the boxes between levels j and j+1.
  std::vector<double> per_level;
  /// Spatial sums of the e^{alpha t_j}-weighted staggered dp^du per level.
  std::vector<double> global_form;
  /// Same sums without the weight; decays like e^{-alpha t_j}.
  std::vector<double> global_unweighted;
};

/// Wedge values on tangent nodes: (dp^du)(U,V) = U_p V_u - U_u V_p and
/// (dq^du)(U,V) = U_q V_u - U_u V_q.
double wedge_pu(const Node& U, const Node& V);
double wedge_qu(const Node& U, const Node& V);

/// Propagates two perturbations of the level-0 state with the linearized
/// scheme along `base`. The shipped problems are linear, so the linearized
/// scheme is the step operator itself. Throws usage_error on shape mismatch.
TangentPair propagate_tangents(const SchemeConfig& cfg, const Grid& grid,
                               const std::vector<StateLevel>& base,
                               const StateLevel& dU0, const StateLevel& dV0);

/// Pointwise omega, kappa with M, K assembled at (z_{i,j}, x_i, t_j).
FormSeries evaluate_forms(const BirkhoffSystem& sys, const Grid& grid,
                          const std::vector<StateLevel>& base,
                          const TangentPair& tangents);

/// Residual of the discrete dissipation law on every box,
///
///   (at*(dp^du)_{i+1/2,j+1} - bt*(dp^du)_{i+1/2,j)}/dt
///     - (cx*(dq^du)_{i+1,j+1/2} - dx_*(dq^du)_{i,j+1/2})/dx,
///
/// with the wedges evaluated on the same staggered averages the scheme uses.
/// This is an exact algebraic identity of the box scheme, so box-scheme
/// tangents give residuals at rounding level; non-geometric schemes do not.
DissipationReport discrete_dissipation_residual(const SchemeConfig& cfg,
                                                const Grid& grid,
                                                const TangentPair& tangents);

struct RefinedRun {
  Grid grid;
  std::vector<StateLevel> base;
  TangentPair tangents;
};

/// Observed convergence order of the centered-difference residual of the
/// continuous dissipation law d/dt omega + d/dx kappa = 0, over a sequence
/// of refined runs. Throws usage_error with fewer than 3 levels.
double continuous_dissipation_check(const BirkhoffSystem& sys,
                                    const std::vector<RefinedRun>& runs);

/// Midpoint-quadrature discretization of the Pfaffian action: the sum over
/// boxes of dt*dx*[F(zbar) . Dt zbar + G(zbar) . Dx zbar - B(zbar)] with zbar
/// the four-corner average and Dt, Dx the box difference quotients.
double discrete_pfaffian_action(const BirkhoffSystem& sys, const Grid& grid,
                                const std::vector<StateLevel>& field);

/// Assembled gradient of the discrete Pfaffian action with respect to the
/// node value z_{i,j}, divided by dt*dx (the discrete Euler-Lagrange
/// residual at that node). Requires 1 <= j <= nt-1; i is periodic.
Vec discrete_el_residual(const BirkhoffSystem& sys, const Grid& grid,
                         const std::vector<StateLevel>& field, int i, int j);

/// Smooth random tangent initial data: trigonometric polynomials with modes
/// 1..4 in u and p, with q = u_x. Deterministic for a given generator state.
StateLevel random_tangent_level(const Grid& grid, SplitMix64& rng);

}  // namespace birkhoff

#endif
