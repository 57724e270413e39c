// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_CSV_HPP
#define BIRKHOFF_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "birkhoff/damped_wave.hpp"
#include "birkhoff/grid.hpp"
#include "birkhoff/monitor.hpp"

namespace birkhoff {

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

/// Schema: t,x,u,p,q — one row per (j, i), ordered by j then i.
void write_solution_csv(std::ostream& os, const Grid& grid,
                        const std::vector<StateLevel>& levels);

/// Inverse of write_solution_csv; values reproduce the field bit-exactly.
std::vector<StateLevel> read_solution_csv(std::istream& is, int nx);

/// Schema: t,max_box_residual,global_weighted_form,global_unweighted_form.
/// Row j carries the residual of the boxes between levels j-1 and j (0 for j = 0).
void write_report_csv(std::ostream& os, const Grid& grid, const DissipationReport& report);

/// Schema: dx,dt,l2_error,observed_order.
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);

}  // namespace birkhoff

#endif
