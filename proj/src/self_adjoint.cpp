// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/self_adjoint.hpp"

#include <cmath>
#include <vector>

#include "birkhoff/errors.hpp"

namespace birkhoff {

std::vector<std::string> SelfAdjointnessReport::failed_conditions() const {
  std::vector<std::string> out;
  if (skew_M_max > tolerance) out.push_back("skewness(M)");
  if (skew_K_max > tolerance) out.push_back("skewness(K)");
  if (closure_M_max > tolerance) out.push_back("closure(M)");
  if (closure_K_max > tolerance) out.push_back("closure(K)");
  if (compat_max > tolerance) out.push_back("compatibility");
  return out;
}

namespace {

// dM/dz^tau at a point, by central differences on the matrix callable.
std::vector<Matrix> matrix_z_derivatives(const MatrixFn& M, int n, const Vec& z,
                                         double x, double t) {
  std::vector<Matrix> d(n);
  for (int tau = 0; tau < n; ++tau) {
    Vec zp = z, zm = z;
    const double h = fd_step(z[tau]);
    zp[tau] += h;
    zm[tau] -= h;
    const double two_h = zp[tau] - zm[tau];
    const Matrix mp = M(zp, x, t);
    const Matrix mm = M(zm, x, t);
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) = (mp(i, j) - mm(i, j)) / two_h;
    d[tau] = out;
  }
  return d;
}

double max_cyclic_violation(const std::vector<Matrix>& dMdz, int n) {
  double worst = 0.0;
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      for (int tau = 0; tau < n; ++tau) {
        const double s = dMdz[tau](mu, nu) + dMdz[mu](nu, tau) + dMdz[nu](tau, mu);
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

}  // namespace

SelfAdjointnessReport check_self_adjointness(const CovariantSystem& sys,
                                             const std::vector<SamplePoint>& samples,
                                             double tol) {
  if (samples.empty()) throw usage_error("check_self_adjointness: empty sample list");
  if (!(tol > 0.0)) throw usage_error("check_self_adjointness: tolerance must be positive");

  SelfAdjointnessReport rep;
  rep.tolerance = tol;
  const int n = sys.n;

  for (const SamplePoint& s : samples) {
    const Matrix M = sys.M(s.z, s.x, s.t);
    const Matrix K = sys.K(s.z, s.x, s.t);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        rep.skew_M_max = std::max(rep.skew_M_max, std::abs(M(i, j) + M(j, i)));
        rep.skew_K_max = std::max(rep.skew_K_max, std::abs(K(i, j) + K(j, i)));
      }

    rep.closure_M_max = std::max(
        rep.closure_M_max, max_cyclic_violation(matrix_z_derivatives(sys.M, n, s.z, s.x, s.t), n));
    rep.closure_K_max = std::max(
        rep.closure_K_max, max_cyclic_violation(matrix_z_derivatives(sys.K, n, s.z, s.x, s.t), n));

    // dM/dt + dK/dx against the antisymmetrized z-Jacobian of D
    Matrix dMdt(n, n), dKdx(n, n);
    {
      const double h = fd_step(s.t);
      const double tp = s.t + h, tm = s.t - h;
      const Matrix mp = sys.M(s.z, s.x, tp);
      const Matrix mm = sys.M(s.z, s.x, tm);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dMdt(i, j) = (mp(i, j) - mm(i, j)) / (tp - tm);
    }
    {
      const double h = fd_step(s.x);
      const double xp = s.x + h, xm = s.x - h;
      const Matrix kp = sys.K(s.z, xp, s.t);
      const Matrix km = sys.K(s.z, xm, s.t);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dKdx(i, j) = (kp(i, j) - km(i, j)) / (xp - xm);
    }
    const Matrix JD = fd_jacobian_z(sys.D, n, s.z, s.x, s.t);
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        const double lhs = dMdt(mu, nu) + dKdx(mu, nu);
        const double rhs = JD(mu, nu) - JD(nu, mu);
        rep.compat_max = std::max(rep.compat_max, std::abs(lhs - rhs));
      }
  }

  rep.passed = rep.skew_M_max <= tol && rep.skew_K_max <= tol && rep.closure_M_max <= tol &&
               rep.closure_K_max <= tol && rep.compat_max <= tol;
  return rep;
}

}  // namespace birkhoff
