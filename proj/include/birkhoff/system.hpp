// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_SYSTEM_HPP
#define BIRKHOFF_SYSTEM_HPP

#include <functional>
#include <optional>

#include "birkhoff/linalg.hpp"

namespace birkhoff {

using StateFn = std::function<Vec(const Vec& z, double x, double t)>;
using ScalarFn = std::function<double(const Vec& z, double x, double t)>;
using MatrixFn = std::function<Matrix(const Vec& z, double x, double t)>;

/// Optional exact derivatives of the one-form components and the Birkhoffian.
/// Jacobian convention: dF_dz(i, j) = dF_i/dz^j.
struct AnalyticJacobians {
  MatrixFn dF_dz;
  MatrixFn dG_dz;
  StateFn dF_dt;
  StateFn dG_dx;
  StateFn dB_dz;
};

/// A first-order PDE system in Birkhoffian form, defined by the time one-form
/// component F, the space one-form component G and the Birkhoffian B. The
/// structure matrices M and K are the antisymmetrized z-Jacobians of F and G,
/// and the system reads
///
///   M(z,x,t) z_t + K(z,x,t) z_x = grad_z B + dF/dt + dG/dx.
///
/// When analytic Jacobians are absent, central finite differences with step
/// h = 1e-5 * max(1, |value|) are used throughout.
struct BirkhoffSystem {
  int n = 0;  // state dimension, n >= 2
  StateFn F;
  StateFn G;
  ScalarFn B;
  std::optional<AnalyticJacobians> jacobians;
};

/// A raw first-order system M z_t + K z_x + D = 0. No structural invariants
/// are assumed; whether it derives from a variational principle is decided by
/// check_self_adjointness.
struct CovariantSystem {
  int n = 0;
  MatrixFn M;
  MatrixFn K;
  StateFn D;
};

/// Skew structure matrices at one evaluation point.
struct StructureMatrices {
  Matrix M;
  Matrix K;
};

/// Finite-difference step for the value v: h = 1e-5 * max(1, |v|).
double fd_step(double v);

/// Central-difference z-Jacobian, J(i, j) = dF_i/dz^j.
Matrix fd_jacobian_z(const StateFn& f, int n, const Vec& z, double x, double t);

Vec fd_partial_t(const StateFn& f, const Vec& z, double x, double t);
Vec fd_partial_x(const StateFn& f, const Vec& z, double x, double t);
Vec fd_grad_z(const ScalarFn& f, const Vec& z, double x, double t);

/// M_{mu,nu} = dF_nu/dz^mu - dF_mu/dz^nu and the analogue for K. The
/// antisymmetrization is explicit, so skewness holds to rounding even with
/// finite-difference Jacobians. Throws evaluation_error on non-finite entries.
StructureMatrices assemble_structure(const BirkhoffSystem& sys, const Vec& z,
                                     double x, double t);

/// D_mu = -(dB/dz^mu + dF_mu/dt + dG_mu/dx), so that M z_t + K z_x + D = 0.
Vec covariant_force(const BirkhoffSystem& sys, const Vec& z, double x, double t);

/// M z_t + K z_x - grad_z B - dF/dt - dG/dx; zero exactly on solutions.
Vec birkhoff_residual(const BirkhoffSystem& sys, const Vec& z, const Vec& z_t,
                      const Vec& z_x, double x, double t);

/// Wraps a Birkhoffian system as a raw covariant system (M, K, D callables).
CovariantSystem make_covariant(const BirkhoffSystem& sys);

/// Largest relative deviation between the supplied analytic Jacobians and
/// central finite differences at one point. Returns 0 when no analytic
/// Jacobians are present.
double max_jacobian_deviation(const BirkhoffSystem& sys, const Vec& z, double x,
                              double t);

}  // namespace birkhoff

#endif
