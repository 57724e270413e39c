// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/damped_wave.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "birkhoff/errors.hpp"
#include "birkhoff/simulate.hpp"

namespace birkhoff {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frequency(const DampedWaveProblem& prob) {
  const double k = prob.mode_k;
  return std::sqrt(1.0 + k * k - prob.alpha * prob.alpha / 4);
}

}  // namespace

void validate(const DampedWaveProblem& prob) {
  if (prob.alpha < 0.0) throw usage_error("DampedWaveProblem: alpha must be non-negative");
  if (prob.mode_k < 1) throw usage_error("DampedWaveProblem: mode_k must be positive");
}

BirkhoffSystem as_birkhoff_system(const DampedWaveProblem& prob) {
  validate(prob);
  const double alpha = prob.alpha, beta = prob.beta;

  BirkhoffSystem sys;
  sys.n = 3;
  sys.F = [alpha, beta](const Vec& z, double x, double t) {
    const double E = std::exp(alpha * t - beta * x);
    return Vec{-E * z[1] / 2, E * z[0] / 2, 0.0};
  };
  sys.G = [alpha, beta](const Vec& z, double x, double t) {
    const double E = std::exp(alpha * t - beta * x);
    return Vec{E * z[2] / 2, 0.0, -E * z[0] / 2};
  };
  sys.B = [alpha, beta](const Vec& z, double x, double t) {
    const double E = std::exp(alpha * t - beta * x);
    const double u = z[0], p = z[1], q = z[2];
    return -E * (u * u + p * p - q * q + alpha * u * p + beta * u * q) / 2;
  };

  AnalyticJacobians jac;
  jac.dF_dz = [alpha, beta](const Vec&, double x, double t) {
    const double E = std::exp(alpha * t - beta * x);
    Matrix J(3, 3);
    J(0, 1) = -E / 2;
    J(1, 0) = E / 2;
    return J;
  };
  jac.dG_dz = [alpha, beta](const Vec&, double x, double t) {
    const double E = std::exp(alpha * t - beta * x);
    Matrix J(3, 3);
    J(0, 2) = E / 2;
    J(2, 0) = -E / 2;
    return J;
  };
  // F and G carry the weight E = e^{alpha t - beta x} linearly, so
  // dF/dt = alpha F and dG/dx = -beta G.
  jac.dF_dt = [sysF = sys.F, alpha](const Vec& z, double x, double t) {
    Vec v = sysF(z, x, t);
    for (double& e : v) e *= alpha;
    return v;
  };
  jac.dG_dx = [sysG = sys.G, beta](const Vec& z, double x, double t) {
    Vec v = sysG(z, x, t);
    for (double& e : v) e *= -beta;
    return v;
  };
  jac.dB_dz = [alpha, beta](const Vec& z, double x, double t) {
    const double E = std::exp(alpha * t - beta * x);
    const double u = z[0], p = z[1], q = z[2];
    return Vec{-E * (2 * u + alpha * p + beta * q) / 2, -E * (2 * p + alpha * u) / 2,
               -E * (-2 * q + beta * u) / 2};
  };
  sys.jacobians = std::move(jac);
  return sys;
}

Node exact_solution(const DampedWaveProblem& prob, double x, double t) {
  validate(prob);
  if (prob.beta != 0.0)
    throw unsupported_problem("exact_solution: implemented for beta = 0 only");
  const double k = prob.mode_k;
  if (!(prob.alpha * prob.alpha < 4 * (1 + k * k)))
    throw unsupported_problem("exact_solution: requires alpha^2 < 4(1 + k^2)");

  const double om = frequency(prob);
  const double decay = std::exp(-prob.alpha * t / 2);
  const double cosx = std::cos(k * x), sinx = std::sin(k * x);
  const double cost = std::cos(om * t + prob.phase), sint = std::sin(om * t + prob.phase);
  const double A = prob.amplitude;
  const double u = A * decay * cosx * cost;
  const double p = A * decay * cosx * (-prob.alpha / 2 * cost - om * sint);
  const double q = -A * k * decay * sinx * cost;
  return Node{u, p, q};
}

StateLevel initial_level(const DampedWaveProblem& prob, const Grid& grid) {
  validate(prob);
  const double periods = (grid.x1 - grid.x0) * prob.mode_k / kTwoPi;
  if (std::abs(periods - std::round(periods)) > 1e-9 || std::round(periods) < 1.0)
    throw usage_error("initial_level: grid must span an integer number of mode periods");

  // The t = 0 profile does not involve beta, so it doubles as initial data
  // for beta != 0 runs.
  DampedWaveProblem sampled = prob;
  sampled.beta = 0.0;
  StateLevel lvl = zero_level(grid);
  for (int i = 0; i < grid.nx; ++i) lvl.z[i] = exact_solution(sampled, grid.x(i), 0.0);
  return lvl;
}

double error_norm(const Grid& grid, const StateLevel& numeric,
                  const DampedWaveProblem& prob) {
  if (prob.beta != 0.0) throw unsupported_problem("error_norm: implemented for beta = 0 only");
  if (static_cast<int>(numeric.z.size()) != grid.nx)
    throw usage_error("error_norm: level size does not match nx");
  const double tj = grid.t(numeric.j);
  CompensatedSum sum;
  for (int i = 0; i < grid.nx; ++i) {
    const double diff = numeric.z[i][0] - exact_solution(prob, grid.x(i), tj)[0];
    sum.add(diff * diff);
  }
  return std::sqrt(grid.dx() * sum.value());
}

std::vector<ConvergenceRow> convergence_study(const DampedWaveProblem& prob,
                                              const SchemeConfig& cfg,
                                              const std::vector<std::pair<int, double>>& refinements,
                                              double t_end) {
  if (prob.beta != 0.0)
    throw unsupported_problem("convergence_study: implemented for beta = 0 only");
  if (refinements.size() < 3)
    throw usage_error("convergence_study: need at least 3 refinement levels");
  if (!(t_end > 0.0)) throw usage_error("convergence_study: t_end must be positive");

  std::vector<ConvergenceRow> rows;
  for (const auto& [nx, dt] : refinements) {
    const int nt = static_cast<int>(std::lround(t_end / dt));
    const Grid grid(0.0, kTwoPi, nx, dt, std::max(nt, 1));
    const std::vector<StateLevel> levels = run_simulation(cfg, grid, initial_level(prob, grid));
    ConvergenceRow row;
    row.dx = grid.dx();
    row.dt = dt;
    row.l2_error = error_norm(grid, levels.back(), prob);
    row.observed_order = std::numeric_limits<double>::quiet_NaN();
    if (!rows.empty()) {
      const ConvergenceRow& prev = rows.back();
      if (row.l2_error > 0.0 && prev.l2_error > 0.0)
        row.observed_order = std::log(prev.l2_error / row.l2_error) / std::log(prev.dx / row.dx);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace birkhoff
