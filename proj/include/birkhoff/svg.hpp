// SPDX-License-Identifier: Apache-2.0
#ifndef BIRKHOFF_SVG_HPP
#define BIRKHOFF_SVG_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace birkhoff {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Static SVG line plot; pure file output, no display server involved.
/// Throws usage_error on an empty series list or mismatched x/y sizes.
void write_line_plot_svg(std::ostream& os, const std::string& title,
                         const std::vector<PlotSeries>& series);

}  // namespace birkhoff

#endif
