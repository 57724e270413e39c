// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "birkhoff/box_scheme.hpp"
#include "birkhoff/damped_wave.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/monitor.hpp"
#include "golden_values.hpp"
#include "test_helpers.hpp"

using namespace birkhoff;
using namespace testutil;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

SchemeConfig make_config(Scheme s, double alpha, double beta) {
  SchemeConfig cfg;
  cfg.scheme = s;
  cfg.alpha = alpha;
  cfg.beta = beta;
  return cfg;
}

Grid half_step_grid(int nx, double t_end) {
  const double dx = kTwoPi / nx, dt = dx / 2;
  return Grid(0.0, kTwoPi, nx, dt, static_cast<int>(std::lround(t_end / dt)));
}

struct Setup {
  Grid grid;
  std::vector<StateLevel> base;
  TangentPair tangents;
};

Setup standard_setup(Scheme scheme, double alpha, double beta, int nx, double t_end,
                     std::uint64_t seed) {
  const SchemeConfig cfg = make_config(scheme, alpha, beta);
  const Grid grid = half_step_grid(nx, t_end);
  DampedWaveProblem prob;
  prob.alpha = alpha;
  prob.beta = beta;
  const auto base = run_simulation(cfg, grid, initial_level(prob, grid));
  SplitMix64 rng(seed);
  const StateLevel dU0 = random_tangent_level(grid, rng);
  const StateLevel dV0 = random_tangent_level(grid, rng);
  return Setup{grid, base, propagate_tangents(cfg, grid, base, dU0, dV0)};
}

// analytic tangent solutions of the linearized (same) equation: derivatives
// of the exact family with respect to amplitude and phase
StateLevel exact_amplitude_tangent(const DampedWaveProblem& prob, const Grid& grid, int j) {
  DampedWaveProblem unit = prob;
  unit.amplitude = 1.0;
  StateLevel lvl = zero_level(grid, j);
  for (int i = 0; i < grid.nx; ++i) lvl.z[i] = exact_solution(unit, grid.x(i), grid.t(j));
  return lvl;
}

StateLevel exact_phase_tangent(const DampedWaveProblem& prob, const Grid& grid, int j) {
  const double k = prob.mode_k;
  const double om = std::sqrt(1 + k * k - prob.alpha * prob.alpha / 4);
  StateLevel lvl = zero_level(grid, j);
  const double t = grid.t(j);
  const double decay = std::exp(-prob.alpha * t / 2);
  for (int i = 0; i < grid.nx; ++i) {
    const double x = grid.x(i);
    const double cosx = std::cos(k * x), sinx = std::sin(k * x);
    const double cost = std::cos(om * t + prob.phase), sint = std::sin(om * t + prob.phase);
    const double A = prob.amplitude;
    lvl.z[i][0] = -A * decay * cosx * sint;
    lvl.z[i][1] = A * decay * cosx * (prob.alpha / 2 * sint - om * cost);
    lvl.z[i][2] = A * k * decay * sinx * sint;
  }
  return lvl;
}

}  // namespace

TEST_CASE("zero perturbation propagates to zero", "[monitor]") {
  const SchemeConfig cfg = make_config(Scheme::box, 2.0, 0.0);
  const Grid grid = half_step_grid(16, 0.5);
  DampedWaveProblem prob;
  const auto base = run_simulation(cfg, grid, initial_level(prob, grid));
  SplitMix64 rng(1);
  const TangentPair pair =
      propagate_tangents(cfg, grid, base, zero_level(grid), random_tangent_level(grid, rng));
  for (const StateLevel& lvl : pair.U)
    for (const Node& nd : lvl.z)
      for (double v : nd) CHECK(v == 0.0);
}

TEST_CASE("identical tangents give identically zero omega", "[monitor]") {
  const SchemeConfig cfg = make_config(Scheme::box, 2.0, 0.0);
  const Grid grid = half_step_grid(16, 0.5);
  DampedWaveProblem prob;
  const auto base = run_simulation(cfg, grid, initial_level(prob, grid));
  SplitMix64 rng(2);
  const StateLevel d0 = random_tangent_level(grid, rng);
  const TangentPair pair = propagate_tangents(cfg, grid, base, d0, d0);
  const FormSeries forms = evaluate_forms(as_birkhoff_system(prob), grid, base, pair);
  for (int j = 0; j <= grid.nt; ++j)
    for (int i = 0; i < grid.nx; ++i) CHECK(forms.omega(i, j) == 0.0);
}

TEST_CASE("tangent propagation matches the directional-derivative oracle", "[monitor][oracle]") {
  const SchemeConfig cfg = make_config(Scheme::box, 2.0, 0.0);
  const Grid grid = half_step_grid(16, 0.5);
  DampedWaveProblem prob;
  const StateLevel init = initial_level(prob, grid);
  const auto base = run_simulation(cfg, grid, init);
  SplitMix64 rng(3);
  const StateLevel dU0 = random_tangent_level(grid, rng);
  const TangentPair pair = propagate_tangents(cfg, grid, base, dU0, dU0);

  const double eps = 1e-6;
  StateLevel bumped = init;
  for (int i = 0; i < grid.nx; ++i)
    for (int c = 0; c < 3; ++c) bumped.z[i][c] += eps * dU0.z[i][c];
  const auto shifted = run_simulation(cfg, grid, bumped);
  double worst = 0.0;
  for (int j = 0; j <= grid.nt; ++j)
    for (int i = 0; i < grid.nx; ++i)
      for (int c = 0; c < 3; ++c) {
        const double quotient = (shifted[j].z[i][c] - base[j].z[i][c]) / eps;
        worst = std::max(worst, std::abs(quotient - pair.U[j].z[i][c]));
      }
  CHECK(worst <= 1e-8);  // exact for the linear problem, up to rounding/eps
}

TEST_CASE("propagate_tangents rejects mismatched shapes", "[monitor][errors]") {
  const SchemeConfig cfg = make_config(Scheme::box, 2.0, 0.0);
  const Grid grid = half_step_grid(16, 0.5);
  DampedWaveProblem prob;
  const auto base = run_simulation(cfg, grid, initial_level(prob, grid));
  StateLevel wrong;
  wrong.z.resize(8);
  CHECK_THROWS_AS(propagate_tangents(cfg, grid, base, wrong, wrong), usage_error);
}

TEST_CASE("pointwise forms of the damped string", "[monitor]") {
  DampedWaveProblem prob;  // alpha = 2
  const Setup s = standard_setup(Scheme::box, 2.0, 0.0, 16, 0.5, 4);
  const BirkhoffSystem sys = as_birkhoff_system(prob);
  const FormSeries forms = evaluate_forms(sys, s.grid, s.base, s.tangents);

  SECTION("omega is the weighted p-u wedge, kappa the negated q-u wedge") {
    for (int j = 0; j <= s.grid.nt; ++j)
      for (int i = 0; i < s.grid.nx; ++i) {
        const double E = std::exp(2.0 * s.grid.t(j));
        const Node& U = s.tangents.U[j].z[i];
        const Node& V = s.tangents.V[j].z[i];
        CHECK(forms.omega(i, j) == Catch::Approx(E * wedge_pu(U, V)).margin(1e-12));
        CHECK(forms.kappa(i, j) == Catch::Approx(-E * wedge_qu(U, V)).margin(1e-12));
      }
  }

  SECTION("unit tangents at t = 0 give omega = -1, kappa = 0") {
    TangentPair unit;
    unit.U.assign(s.base.size(), zero_level(s.grid));
    unit.V.assign(s.base.size(), zero_level(s.grid));
    for (std::size_t j = 0; j < s.base.size(); ++j) {
      unit.U[j].j = static_cast<int>(j);
      unit.V[j].j = static_cast<int>(j);
      for (int i = 0; i < s.grid.nx; ++i) {
        unit.U[j].z[i] = Node{1.0, 0.0, 0.0};
        unit.V[j].z[i] = Node{0.0, 1.0, 0.0};
      }
    }
    const FormSeries f = evaluate_forms(sys, s.grid, s.base, unit);
    CHECK(f.omega(3, 0) == Catch::Approx(-1.0).margin(1e-14));
    CHECK(f.kappa(3, 0) == Catch::Approx(0.0).margin(1e-14));
  }

  SECTION("omega is antisymmetric under tangent swap") {
    TangentPair swapped{s.tangents.V, s.tangents.U};
    const FormSeries f = evaluate_forms(sys, s.grid, s.base, swapped);
    for (int j = 0; j <= s.grid.nt; ++j)
      for (int i = 0; i < s.grid.nx; ++i) CHECK(f.omega(i, j) == -forms.omega(i, j));
  }
}

TEST_CASE("evaluate_forms is bilinear in the tangents", "[monitor][property]") {
  DampedWaveProblem prob;
  const SchemeConfig cfg = make_config(Scheme::box, 2.0, 0.0);
  const Grid grid = half_step_grid(8, 0.25);
  const auto base = run_simulation(cfg, grid, initial_level(prob, grid));
  const BirkhoffSystem sys = as_birkhoff_system(prob);
  SplitMix64 rng(8);
  const StateLevel u1 = random_tangent_level(grid, rng), u2 = random_tangent_level(grid, rng);
  const StateLevel v0 = random_tangent_level(grid, rng);
  const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);

  StateLevel combo = zero_level(grid);
  for (int i = 0; i < grid.nx; ++i)
    for (int c = 0; c < 3; ++c) combo.z[i][c] = a * u1.z[i][c] + b * u2.z[i][c];

  const TangentPair p1 = propagate_tangents(cfg, grid, base, u1, v0);
  const TangentPair p2 = propagate_tangents(cfg, grid, base, u2, v0);
  const TangentPair pc = propagate_tangents(cfg, grid, base, combo, v0);
  const FormSeries f1 = evaluate_forms(sys, grid, base, p1);
  const FormSeries f2 = evaluate_forms(sys, grid, base, p2);
  const FormSeries fc = evaluate_forms(sys, grid, base, pc);
  for (int j = 0; j <= grid.nt; ++j)
    for (int i = 0; i < grid.nx; ++i)
      CHECK(fc.omega(i, j) ==
            Catch::Approx(a * f1.omega(i, j) + b * f2.omega(i, j)).margin(1e-9));
}

TEST_CASE("box tangents satisfy the discrete dissipation law to rounding", "[monitor]") {
  const Setup s = standard_setup(Scheme::box, 2.0, 0.0, 64, kTwoPi, 5);  // nt = 128
  REQUIRE(s.grid.nt == 128);
  const DissipationReport rep =
      discrete_dissipation_residual(make_config(Scheme::box, 2.0, 0.0), s.grid, s.tangents);
  CHECK(rep.max_residual <= 1e-10);
  CHECK(rep.per_level.size() == 128);
}

TEST_CASE("the discrete law is exact for beta != 0 as well", "[monitor]") {
  const Setup s = standard_setup(Scheme::box, 2.0, 0.3, 32, 1.0, 6);
  const DissipationReport rep =
      discrete_dissipation_residual(make_config(Scheme::box, 2.0, 0.3), s.grid, s.tangents);
  CHECK(rep.max_residual <= 1e-10);
}

TEST_CASE("leapfrog tangents violate the discrete law", "[monitor][golden]") {
  const Setup s = standard_setup(Scheme::leapfrog, 2.0, 0.0, 64, 1.0, 42);
  const DissipationReport rep =
      discrete_dissipation_residual(make_config(Scheme::leapfrog, 2.0, 0.0), s.grid, s.tangents);
  CHECK(rep.max_residual > 1e-4);
  CHECK(rep.max_residual > golden::kLeapfrogDissipationResidual / golden::kLeapfrogResidualFactor);
  CHECK(rep.max_residual < golden::kLeapfrogDissipationResidual * golden::kLeapfrogResidualFactor);
}

TEST_CASE("zero tangents give a zero report", "[monitor]") {
  const SchemeConfig cfg = make_config(Scheme::box, 2.0, 0.0);
  const Grid grid = half_step_grid(16, 0.5);
  DampedWaveProblem prob;
  const auto base = run_simulation(cfg, grid, initial_level(prob, grid));
  const TangentPair pair = propagate_tangents(cfg, grid, base, zero_level(grid), zero_level(grid));
  const DissipationReport rep = discrete_dissipation_residual(cfg, grid, pair);
  CHECK(rep.max_residual == 0.0);
  for (double g : rep.global_form) CHECK(g == 0.0);
}

TEST_CASE("weighted global form is conserved to rounding", "[monitor][property]") {
  for (double ratio : {0.25, 0.5, 1.0}) {
    const int nx = 32;
    const double dx = kTwoPi / nx, dt = ratio * dx;
    const Grid grid(0.0, kTwoPi, nx, dt, 40);
    const SchemeConfig cfg = make_config(Scheme::box, 2.0, 0.0);
    DampedWaveProblem prob;
    const auto base = run_simulation(cfg, grid, initial_level(prob, grid));
    SplitMix64 rng(7);
    const TangentPair pair = propagate_tangents(cfg, grid, base, random_tangent_level(grid, rng),
                                                random_tangent_level(grid, rng));
    const DissipationReport rep = discrete_dissipation_residual(cfg, grid, pair);
    CHECK(rep.max_residual <= 1e-10);
    const double g0 = rep.global_form.front();
    for (double gj : rep.global_form) {
      INFO("dt/dx = " << ratio);
      CHECK(std::abs(gj - g0) <= 1e-10 * std::abs(g0));
    }
  }
}

TEST_CASE("undamped reduction conserves the plain summed form", "[monitor]") {
  const Setup s = standard_setup(Scheme::box, 0.0, 0.0, 32, 1.0, 9);
  const DissipationReport rep =
      discrete_dissipation_residual(make_config(Scheme::box, 0.0, 0.0), s.grid, s.tangents);
  CHECK(rep.max_residual <= 1e-10);
  const double g0 = rep.global_unweighted.front();
  for (double gj : rep.global_unweighted) CHECK(std::abs(gj - g0) <= 1e-10 * std::abs(g0));
}

TEST_CASE("unweighted form decays along the exact envelope", "[monitor][property]") {
  const int nx = 64;  // dt = pi/64 < 1/64 is not needed; bound holds exactly at staggered points
  const Setup s = standard_setup(Scheme::box, 2.0, 0.0, nx, 1.0, 10);
  const DissipationReport rep =
      discrete_dissipation_residual(make_config(Scheme::box, 2.0, 0.0), s.grid, s.tangents);
  const double g0 = std::abs(rep.global_unweighted.front());
  for (int j = 0; j <= s.grid.nt; ++j) {
    const double bound = g0 * std::exp(-2.0 * s.grid.t(j));
    CHECK(std::abs(rep.global_unweighted[j]) <= bound * 1.05);
    CHECK(std::abs(rep.global_unweighted[j]) >= bound * 0.95);
  }
}

TEST_CASE("continuous dissipation law converges at second order", "[monitor]") {
  DampedWaveProblem prob;
  const BirkhoffSystem sys = as_birkhoff_system(prob);
  std::vector<RefinedRun> runs;
  for (int nx : {32, 64, 128}) {
    Setup s = standard_setup(Scheme::box, 2.0, 0.0, nx, 1.0, 11);
    runs.push_back(RefinedRun{s.grid, std::move(s.base), std::move(s.tangents)});
  }
  const double order = continuous_dissipation_check(sys, runs);
  CHECK(order == Catch::Approx(2.0).margin(0.2));
}

TEST_CASE("continuous law holds on analytically sampled tangents", "[monitor][oracle]") {
  // U is the base solution itself, V a second-mode solution; both solve the
  // linearized (same) equation, and their wedge has genuine (x, t) structure.
  // (Amplitude/phase tangents of one standing wave give a constant omega and
  // a zero kappa, leaving nothing to measure.)
  DampedWaveProblem prob;
  DampedWaveProblem second = prob;
  second.mode_k = 2;
  const BirkhoffSystem sys = as_birkhoff_system(prob);
  std::vector<RefinedRun> runs;
  for (int nx : {16, 32, 64}) {
    const Grid grid = half_step_grid(nx, 1.0);
    RefinedRun run;
    run.grid = grid;
    for (int j = 0; j <= grid.nt; ++j) {
      StateLevel lvl = zero_level(grid, j);
      StateLevel vlvl = zero_level(grid, j);
      for (int i = 0; i < grid.nx; ++i) {
        lvl.z[i] = exact_solution(prob, grid.x(i), grid.t(j));
        vlvl.z[i] = exact_solution(second, grid.x(i), grid.t(j));
      }
      run.base.push_back(lvl);
      run.tangents.U.push_back(exact_amplitude_tangent(prob, grid, j));
      run.tangents.V.push_back(vlvl);
    }
    runs.push_back(std::move(run));
  }
  const double order = continuous_dissipation_check(sys, runs);
  INFO("observed order " << order);
  CHECK(order >= 1.8);
}

TEST_CASE("amplitude/phase tangents give the stationary wedge cos^2(x)", "[monitor][oracle]") {
  // closed form: omega = cos^2(k x) independent of t, kappa = 0
  DampedWaveProblem prob;
  const BirkhoffSystem sys = as_birkhoff_system(prob);
  const Grid grid = half_step_grid(16, 0.5);
  RefinedRun run;
  run.grid = grid;
  for (int j = 0; j <= grid.nt; ++j) {
    StateLevel lvl = zero_level(grid, j);
    for (int i = 0; i < grid.nx; ++i) lvl.z[i] = exact_solution(prob, grid.x(i), grid.t(j));
    run.base.push_back(lvl);
    run.tangents.U.push_back(exact_amplitude_tangent(prob, grid, j));
    run.tangents.V.push_back(exact_phase_tangent(prob, grid, j));
  }
  const FormSeries f = evaluate_forms(sys, grid, run.base, run.tangents);
  for (int j = 0; j <= grid.nt; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      const double c = std::cos(grid.x(i));
      CHECK(f.omega(i, j) == Catch::Approx(c * c).margin(1e-13));
      CHECK(std::abs(f.kappa(i, j)) <= 1e-13);
    }
}

TEST_CASE("constant tangents on the undamped problem have zero residual", "[monitor]") {
  DampedWaveProblem prob;
  prob.alpha = 0.0;
  const BirkhoffSystem sys = as_birkhoff_system(prob);
  std::vector<RefinedRun> runs;
  for (int nx : {8, 16, 32}) {
    const Grid grid = half_step_grid(nx, 0.5);
    RefinedRun run;
    run.grid = grid;
    for (int j = 0; j <= grid.nt; ++j) {
      StateLevel lvl = zero_level(grid, j);
      for (int i = 0; i < grid.nx; ++i) lvl.z[i] = exact_solution(prob, grid.x(i), grid.t(j));
      run.base.push_back(lvl);
      StateLevel cu = zero_level(grid, j), cv = zero_level(grid, j);
      for (int i = 0; i < grid.nx; ++i) {
        cu.z[i] = Node{0.3, -0.7, 0.1};
        cv.z[i] = Node{-0.2, 0.5, 0.9};
      }
      run.tangents.U.push_back(cu);
      run.tangents.V.push_back(cv);
    }
    runs.push_back(std::move(run));
  }
  // constant M, K and constant tangents: omega, kappa constant, residual 0;
  // the order fit degenerates, so check the residual directly instead
  const FormSeries f = evaluate_forms(sys, runs[0].grid, runs[0].base, runs[0].tangents);
  for (int j = 1; j < runs[0].grid.nt; ++j)
    for (int i = 0; i < runs[0].grid.nx; ++i) {
      const int ip = (i + 1) % runs[0].grid.nx, im = (i + runs[0].grid.nx - 1) % runs[0].grid.nx;
      const double r = (f.omega(i, j + 1) - f.omega(i, j - 1)) / (2 * runs[0].grid.dt) +
                       (f.kappa(ip, j) - f.kappa(im, j)) / (2 * runs[0].grid.dx());
      CHECK(std::abs(r) <= 1e-14);
    }
}

TEST_CASE("continuous check needs three levels", "[monitor][errors]") {
  DampedWaveProblem prob;
  const BirkhoffSystem sys = as_birkhoff_system(prob);
  std::vector<RefinedRun> runs(2);
  CHECK_THROWS_AS(continuous_dissipation_check(sys, runs), usage_error);
}

TEST_CASE("pfaffian action basics", "[monitor]") {
  DampedWaveProblem prob;
  const BirkhoffSystem sys = as_birkhoff_system(prob);

  SECTION("zero field gives zero action") {
    const Grid grid = half_step_grid(8, 0.5);
    std::vector<StateLevel> field;
    for (int j = 0; j <= grid.nt; ++j) field.push_back(zero_level(grid, j));
    CHECK(discrete_pfaffian_action(sys, grid, field) == 0.0);
  }

  SECTION("action is invariant under spatial relabeling for alpha-only damping") {
    const Grid grid = half_step_grid(16, 0.5);
    SplitMix64 rng(12);
    std::vector<StateLevel> field, rotated;
    for (int j = 0; j <= grid.nt; ++j) {
      field.push_back(random_tangent_level(grid, rng));
      field.back().j = j;
    }
    for (int j = 0; j <= grid.nt; ++j) {
      StateLevel lvl = zero_level(grid, j);
      for (int i = 0; i < grid.nx; ++i) lvl.z[i] = field[j].z[(i + 5) % grid.nx];
      rotated.push_back(lvl);
    }
    const double a = discrete_pfaffian_action(sys, grid, field);
    const double b = discrete_pfaffian_action(sys, grid, rotated);
    CHECK(a == Catch::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("action gradient equals the assembled discrete EL residual", "[monitor][oracle]") {
  DampedWaveProblem prob;
  const BirkhoffSystem sys = as_birkhoff_system(prob);
  const Grid grid = half_step_grid(16, 0.75);
  SplitMix64 rng(13);
  std::vector<StateLevel> field;
  for (int j = 0; j <= grid.nt; ++j) {
    field.push_back(random_tangent_level(grid, rng));
    field.back().j = j;
  }

  const double scale = grid.dt * grid.dx();
  for (int trial = 0; trial < 20; ++trial) {
    const int i = static_cast<int>(rng.next() % static_cast<std::uint64_t>(grid.nx));
    const int j = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(grid.nt - 1));
    const Vec el = discrete_el_residual(sys, grid, field, i, j);

    Vec fd(3);
    const double eps = 1e-6;
    for (int c = 0; c < 3; ++c) {
      auto bump = [&](double sign) {
        std::vector<StateLevel> f = field;
        f[j].z[i][c] += sign * eps;
        return discrete_pfaffian_action(sys, grid, f);
      };
      fd[c] = (bump(1.0) - bump(-1.0)) / (2 * eps) / scale;
    }
    double num = 0.0, den = 0.0;
    for (int c = 0; c < 3; ++c) {
      num = std::max(num, std::abs(fd[c] - el[c]));
      den = std::max(den, std::abs(el[c]));
    }
    INFO("node (" << i << ", " << j << ")");
    CHECK(num <= 1e-6 * std::max(den, 1.0));
  }
}

TEST_CASE("EL residual rejects boundary nodes", "[monitor][errors]") {
  DampedWaveProblem prob;
  const BirkhoffSystem sys = as_birkhoff_system(prob);
  const Grid grid = half_step_grid(8, 0.5);
  std::vector<StateLevel> field;
  for (int j = 0; j <= grid.nt; ++j) field.push_back(zero_level(grid, j));
  CHECK_THROWS_AS(discrete_el_residual(sys, grid, field, 0, 0), usage_error);
  CHECK_THROWS_AS(discrete_el_residual(sys, grid, field, 0, grid.nt), usage_error);
}
