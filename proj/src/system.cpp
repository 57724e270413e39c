// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/system.hpp"

#include <cmath>
#include <string>

#include "birkhoff/errors.hpp"

namespace birkhoff {

namespace {

void require_finite(const Vec& v, const char* what) {
  for (double e : v) {
    if (!std::isfinite(e)) throw evaluation_error(std::string(what) + " produced a non-finite value");
  }
}

void require_finite(const Matrix& m, const char* what) {
  for (double e : m.data()) {
    if (!std::isfinite(e)) throw evaluation_error(std::string(what) + " produced a non-finite value");
  }
}

}  // namespace

double fd_step(double v) { return 1e-5 * std::max(1.0, std::abs(v)); }

Matrix fd_jacobian_z(const StateFn& f, int n, const Vec& z, double x, double t) {
  Matrix J(n, n);
  for (int j = 0; j < n; ++j) {
    Vec zp = z, zm = z;
    const double h = fd_step(z[j]);
    zp[j] += h;
    zm[j] -= h;
    // the realized spacing absorbs representation error of z_j +- h
    const double two_h = zp[j] - zm[j];
    const Vec fp = f(zp, x, t);
    const Vec fm = f(zm, x, t);
    for (int i = 0; i < n; ++i) J(i, j) = (fp[i] - fm[i]) / two_h;
  }
  return J;
}

Vec fd_partial_t(const StateFn& f, const Vec& z, double x, double t) {
  const double h = fd_step(t);
  const double tp = t + h, tm = t - h;
  const Vec fp = f(z, x, tp);
  const Vec fm = f(z, x, tm);
  Vec out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = (fp[i] - fm[i]) / (tp - tm);
  return out;
}

Vec fd_partial_x(const StateFn& f, const Vec& z, double x, double t) {
  const double h = fd_step(x);
  const double xp = x + h, xm = x - h;
  const Vec fp = f(z, xp, t);
  const Vec fm = f(z, xm, t);
  Vec out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = (fp[i] - fm[i]) / (xp - xm);
  return out;
}

Vec fd_grad_z(const ScalarFn& f, const Vec& z, double x, double t) {
  Vec g(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    Vec zp = z, zm = z;
    const double h = fd_step(z[j]);
    zp[j] += h;
    zm[j] -= h;
    g[j] = (f(zp, x, t) - f(zm, x, t)) / (zp[j] - zm[j]);
  }
  return g;
}

StructureMatrices assemble_structure(const BirkhoffSystem& sys, const Vec& z,
                                     double x, double t) {
  const int n = sys.n;
  const Matrix JF = sys.jacobians ? sys.jacobians->dF_dz(z, x, t)
                                  : fd_jacobian_z(sys.F, n, z, x, t);
  const Matrix JG = sys.jacobians ? sys.jacobians->dG_dz(z, x, t)
                                  : fd_jacobian_z(sys.G, n, z, x, t);
  require_finite(JF, "dF/dz");
  require_finite(JG, "dG/dz");
  StructureMatrices out{Matrix(n, n), Matrix(n, n)};
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      out.M(mu, nu) = JF(nu, mu) - JF(mu, nu);
      out.K(mu, nu) = JG(nu, mu) - JG(mu, nu);
    }
  }
  return out;
}

Vec covariant_force(const BirkhoffSystem& sys, const Vec& z, double x, double t) {
  const Vec gB = sys.jacobians ? sys.jacobians->dB_dz(z, x, t) : fd_grad_z(sys.B, z, x, t);
  const Vec Ft = sys.jacobians ? sys.jacobians->dF_dt(z, x, t) : fd_partial_t(sys.F, z, x, t);
  const Vec Gx = sys.jacobians ? sys.jacobians->dG_dx(z, x, t) : fd_partial_x(sys.G, z, x, t);
  require_finite(gB, "dB/dz");
  require_finite(Ft, "dF/dt");
  require_finite(Gx, "dG/dx");
  Vec D(sys.n);
  for (int i = 0; i < sys.n; ++i) D[i] = -(gB[i] + Ft[i] + Gx[i]);
  return D;
}

Vec birkhoff_residual(const BirkhoffSystem& sys, const Vec& z, const Vec& z_t,
                      const Vec& z_x, double x, double t) {
  const StructureMatrices s = assemble_structure(sys, z, x, t);
  const Vec D = covariant_force(sys, z, x, t);
  Vec r(sys.n, 0.0);
  for (int mu = 0; mu < sys.n; ++mu) {
    double acc = D[mu];
    for (int nu = 0; nu < sys.n; ++nu) acc += s.M(mu, nu) * z_t[nu] + s.K(mu, nu) * z_x[nu];
    r[mu] = acc;
  }
  return r;
}

CovariantSystem make_covariant(const BirkhoffSystem& sys) {
  CovariantSystem cov;
  cov.n = sys.n;
  cov.M = [sys](const Vec& z, double x, double t) { return assemble_structure(sys, z, x, t).M; };
  cov.K = [sys](const Vec& z, double x, double t) { return assemble_structure(sys, z, x, t).K; };
  cov.D = [sys](const Vec& z, double x, double t) { return covariant_force(sys, z, x, t); };
  return cov;
}

double max_jacobian_deviation(const BirkhoffSystem& sys, const Vec& z, double x,
                              double t) {
  if (!sys.jacobians) return 0.0;
  const auto& jac = *sys.jacobians;
  double worst = 0.0;
  const auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
  };
  {
    const Matrix A = jac.dF_dz(z, x, t);
    const Matrix Fd = fd_jacobian_z(sys.F, sys.n, z, x, t);
    for (int i = 0; i < sys.n; ++i)
      for (int j = 0; j < sys.n; ++j) worst = std::max(worst, rel(A(i, j), Fd(i, j)));
  }
  {
    const Matrix A = jac.dG_dz(z, x, t);
    const Matrix Fd = fd_jacobian_z(sys.G, sys.n, z, x, t);
    for (int i = 0; i < sys.n; ++i)
      for (int j = 0; j < sys.n; ++j) worst = std::max(worst, rel(A(i, j), Fd(i, j)));
  }
  const auto cmp_vec = [&](const Vec& a, const Vec& b) {
    for (int i = 0; i < sys.n; ++i) worst = std::max(worst, rel(a[i], b[i]));
  };
  cmp_vec(jac.dF_dt(z, x, t), fd_partial_t(sys.F, z, x, t));
  cmp_vec(jac.dG_dx(z, x, t), fd_partial_x(sys.G, z, x, t));
  cmp_vec(jac.dB_dz(z, x, t), fd_grad_z(sys.B, z, x, t));
  return worst;
}

}  // namespace birkhoff
