// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: run simulations, verify structure and dissipation
// properties, and produce convergence tables. Exit codes: 0 ok, 1 runtime or
// solver failure, 2 usage/config error, 3 check failure.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "birkhoff/box_scheme.hpp"
#include "birkhoff/config.hpp"
#include "birkhoff/csv.hpp"
#include "birkhoff/damped_wave.hpp"
#include "birkhoff/errors.hpp"
#include "birkhoff/monitor.hpp"
#include "birkhoff/self_adjoint.hpp"
#include "birkhoff/svg.hpp"

namespace {

using namespace birkhoff;

struct CliFlags {
  std::string config_path;
  std::string scheme;
  std::string out_dir;
  double alpha = 0, beta = 0, dt = 0, t_end = 0;
  int mode_k = 0, nx = 0;
  std::uint64_t seed = 0;
};

void add_common_options(CLI::App* sub, CliFlags& f) {
  sub->add_option("--config", f.config_path, "configuration file (flat key = value)");
  sub->add_option("--scheme", f.scheme, "integrator: box or leapfrog")
      ->check(CLI::IsMember({"box", "leapfrog"}));
  sub->add_option("--alpha", f.alpha, "time damping coefficient");
  sub->add_option("--beta", f.beta, "space drift coefficient");
  sub->add_option("--mode-k", f.mode_k, "spatial wavenumber of the initial data");
  sub->add_option("--nx", f.nx, "number of spatial cells");
  sub->add_option("--dt", f.dt, "time step (default dx/2)");
  sub->add_option("--t-end", f.t_end, "final time");
  sub->add_option("--seed", f.seed, "seed for random tangent initial data");
  sub->add_option("--out-dir", f.out_dir, "output directory");
}

RunConfig build_config(const CLI::App* sub, const CliFlags& f) {
  RunConfig cfg;
  if (sub->count("--config")) cfg = parse_config_file(f.config_path);
  if (sub->count("--scheme")) cfg.scheme = scheme_from_string(f.scheme);
  if (sub->count("--alpha")) cfg.problem.alpha = f.alpha;
  if (sub->count("--beta")) cfg.problem.beta = f.beta;
  if (sub->count("--mode-k")) cfg.problem.mode_k = f.mode_k;
  if (sub->count("--nx")) cfg.nx = f.nx;
  if (sub->count("--dt")) cfg.dt = f.dt;
  if (sub->count("--t-end")) cfg.t_end = f.t_end;
  if (sub->count("--seed")) cfg.seed = f.seed;
  if (sub->count("--out-dir")) cfg.out_dir = f.out_dir;
  return cfg;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write output file '" + path + "'");
  return os;
}

void emit_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';
}

int cmd_run(const RunConfig& cfg) {
  validate(cfg.problem);
  const Grid grid = cfg.make_grid();
  const SchemeConfig scfg = cfg.scheme_config();
  const StateLevel init = initial_level(cfg.problem, grid);

  std::vector<std::string> warnings;
  const std::vector<StateLevel> levels = run_simulation(scfg, grid, init, &warnings);
  emit_warnings(warnings);

  {
    auto os = open_output(cfg.out_dir + "/solution.csv");
    write_solution_csv(os, grid, levels);
  }
  {
    PlotSeries first{"t=" + format_double(0.0), {}, {}};
    PlotSeries last{"t=" + format_double(grid.t(grid.nt)), {}, {}};
    for (int i = 0; i < grid.nx; ++i) {
      first.x.push_back(grid.x(i));
      first.y.push_back(levels.front().z[i][0]);
      last.x.push_back(grid.x(i));
      last.y.push_back(levels.back().z[i][0]);
    }
    auto os = open_output(cfg.out_dir + "/snapshot.svg");
    write_line_plot_svg(os, "u(x) snapshots (" + to_string(cfg.scheme) + ")", {first, last});
  }

  if (cfg.problem.beta == 0.0) {
    const double err = error_norm(grid, levels.back(), cfg.problem);
    std::cout << "final_l2_error=" << format_double(err) << '\n';
  }
  std::cout << "wrote " << cfg.out_dir << "/solution.csv" << '\n';
  return 0;
}

CovariantSystem apply_debug_perturbation(CovariantSystem cov, DebugPerturbation kind) {
  switch (kind) {
    case DebugPerturbation::none:
      break;
    case DebugPerturbation::skew: {
      const MatrixFn inner = cov.M;
      cov.M = [inner](const Vec& z, double x, double t) {
        Matrix m = inner(z, x, t);
        m(1, 1) = 0.1;
        return m;
      };
      break;
    }
    case DebugPerturbation::closure: {
      const MatrixFn inner = cov.M;
      cov.M = [inner](const Vec& z, double x, double t) {
        Matrix m = inner(z, x, t);
        m(0, 1) += z[2] * z[2];
        m(1, 0) -= z[2] * z[2];
        return m;
      };
      break;
    }
    case DebugPerturbation::scaled_d: {
      const StateFn inner = cov.D;
      cov.D = [inner](const Vec& z, double x, double t) {
        Vec d = inner(z, x, t);
        for (double& v : d) v *= 2.0;
        return d;
      };
      break;
    }
  }
  return cov;
}

int cmd_check(const RunConfig& cfg) {
  validate(cfg.problem);
  const Grid grid = cfg.make_grid();
  const SchemeConfig scfg = cfg.scheme_config();

  std::vector<std::string> warnings;
  const std::vector<StateLevel> base =
      run_simulation(scfg, grid, initial_level(cfg.problem, grid), &warnings);
  emit_warnings(warnings);

  SplitMix64 rng(cfg.seed);
  const StateLevel dU0 = random_tangent_level(grid, rng);
  const StateLevel dV0 = random_tangent_level(grid, rng);
  const TangentPair tangents = propagate_tangents(scfg, grid, base, dU0, dV0);
  const DissipationReport rep = discrete_dissipation_residual(scfg, grid, tangents);

  const BirkhoffSystem sys = as_birkhoff_system(cfg.problem);
  const CovariantSystem cov = apply_debug_perturbation(make_covariant(sys), cfg.debug);
  std::vector<SamplePoint> samples;
  for (int s = 0; s < 100; ++s) {
    SamplePoint pt;
    pt.z = Vec{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    pt.x = rng.uniform(0.0, 2 * 3.141592653589793);
    pt.t = rng.uniform(0.0, 1.0);
    samples.push_back(pt);
  }
  const SelfAdjointnessReport sa = check_self_adjointness(cov, samples, cfg.check_tol);

  std::cout << "self_adjointness: skew_M_max=" << format_double(sa.skew_M_max)
            << " skew_K_max=" << format_double(sa.skew_K_max)
            << " closure_M_max=" << format_double(sa.closure_M_max)
            << " closure_K_max=" << format_double(sa.closure_K_max)
            << " compat_max=" << format_double(sa.compat_max)
            << " tol=" << format_double(sa.tolerance) << (sa.passed ? " PASS" : " FAIL") << '\n';
  const bool dissipation_ok = rep.max_residual <= cfg.dissipation_tol;
  std::cout << "dissipation: max_residual=" << format_double(rep.max_residual)
            << " tol=" << format_double(cfg.dissipation_tol) << (dissipation_ok ? " PASS" : " FAIL")
            << '\n';

  {
    auto os = open_output(cfg.out_dir + "/report.csv");
    write_report_csv(os, grid, rep);
  }
  {
    PlotSeries weighted{"weighted", {}, {}};
    PlotSeries unweighted{"unweighted", {}, {}};
    for (int j = 0; j <= grid.nt; ++j) {
      weighted.x.push_back(grid.t(j));
      weighted.y.push_back(rep.global_form[j]);
      unweighted.x.push_back(grid.t(j));
      unweighted.y.push_back(rep.global_unweighted[j]);
    }
    auto os = open_output(cfg.out_dir + "/global_form.svg");
    write_line_plot_svg(os, "summed two-form vs t", {weighted, unweighted});
  }
  if (grid.nt >= 1) {
    PlotSeries res{"max box residual", {}, {}};
    for (int j = 0; j < grid.nt; ++j) {
      res.x.push_back(grid.t(j + 1));
      res.y.push_back(rep.per_level[j]);
    }
    auto os = open_output(cfg.out_dir + "/residual.svg");
    write_line_plot_svg(os, "dissipation residual vs t", {res});
  }

  std::vector<std::string> failures = sa.failed_conditions();
  if (!dissipation_ok) failures.push_back("dissipation");
  if (!failures.empty()) {
    std::cout << "check FAILED:";
    for (const std::string& f : failures) std::cout << ' ' << f;
    std::cout << '\n';
    return 3;
  }
  std::cout << "all checks passed" << '\n';
  return 0;
}

int cmd_converge(const RunConfig& cfg) {
  validate(cfg.problem);
  if (cfg.problem.beta != 0.0)
    throw usage_error("converge requires beta = 0 (exact solution needed)");
  if (cfg.levels < 3) throw usage_error("converge requires at least 3 refinement levels");

  std::vector<std::pair<int, double>> refinements;
  for (int l = 0; l < cfg.levels; ++l)
    refinements.emplace_back(cfg.nx << l, cfg.effective_dt() / static_cast<double>(1 << l));

  const std::vector<ConvergenceRow> rows =
      convergence_study(cfg.problem, cfg.scheme_config(), refinements, cfg.t_end);
  {
    auto os = open_output(cfg.out_dir + "/convergence.csv");
    write_convergence_csv(os, rows);
  }
  std::cout << "dx,dt,l2_error,observed_order\n";
  for (const ConvergenceRow& r : rows)
    std::cout << format_double(r.dx) << ',' << format_double(r.dt) << ','
              << format_double(r.l2_error) << ',' << format_double(r.observed_order) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure-preserving integrator for dissipative wave systems"};
  app.require_subcommand(1);

  CliFlags flags;
  CLI::App* run = app.add_subcommand("run", "integrate and write the solution CSV");
  CLI::App* check = app.add_subcommand("check", "verify self-adjointness and the discrete dissipation law");
  CLI::App* converge = app.add_subcommand("converge", "run a refinement study against the exact solution");
  add_common_options(run, flags);
  add_common_options(check, flags);
  add_common_options(converge, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(build_config(run, flags));
    if (check->parsed()) return cmd_check(build_config(check, flags));
    return cmd_converge(build_config(converge, flags));
  } catch (const birkhoff::usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
