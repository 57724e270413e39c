// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "birkhoff/errors.hpp"

namespace birkhoff {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_solution_csv(std::ostream& os, const Grid& grid,
                        const std::vector<StateLevel>& levels) {
  os << "t,x,u,p,q\n";
  for (const StateLevel& lvl : levels) {
    const std::string t = format_double(grid.t(lvl.j));
    for (int i = 0; i < grid.nx; ++i) {
      os << t << ',' << format_double(grid.x(i)) << ',' << format_double(lvl.z[i][0]) << ','
         << format_double(lvl.z[i][1]) << ',' << format_double(lvl.z[i][2]) << '\n';
    }
  }
}

std::vector<StateLevel> read_solution_csv(std::istream& is, int nx) {
  std::string line;
  if (!std::getline(is, line) || line != "t,x,u,p,q")
    throw usage_error("read_solution_csv: missing or unexpected header");
  std::vector<StateLevel> levels;
  int row = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    double vals[5];
    for (int c = 0; c < 5; ++c) {
      if (!std::getline(ls, cell, ',')) throw usage_error("read_solution_csv: short row");
      vals[c] = std::strtod(cell.c_str(), nullptr);
    }
    const int i = row % nx;
    if (i == 0) {
      StateLevel lvl;
      lvl.j = static_cast<int>(levels.size());
      lvl.z.resize(nx);
      levels.push_back(std::move(lvl));
    }
    levels.back().z[i] = Node{vals[2], vals[3], vals[4]};
    ++row;
  }
  if (row % nx != 0) throw usage_error("read_solution_csv: row count is not a multiple of nx");
  return levels;
}

void write_report_csv(std::ostream& os, const Grid& grid, const DissipationReport& report) {
  os << "t,max_box_residual,global_weighted_form,global_unweighted_form\n";
  for (int j = 0; j < static_cast<int>(report.global_form.size()); ++j) {
    const double res = (j == 0) ? 0.0 : report.per_level[j - 1];
    os << format_double(grid.t(j)) << ',' << format_double(res) << ','
       << format_double(report.global_form[j]) << ','
       << format_double(report.global_unweighted[j]) << '\n';
  }
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
  os << "dx,dt,l2_error,observed_order\n";
  for (const ConvergenceRow& r : rows) {
    os << format_double(r.dx) << ',' << format_double(r.dt) << ',' << format_double(r.l2_error)
       << ',' << format_double(r.observed_order) << '\n';
  }
}

}  // namespace birkhoff
