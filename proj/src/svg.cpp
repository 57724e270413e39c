// SPDX-License-Identifier: Apache-2.0
#include "birkhoff/svg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "birkhoff/csv.hpp"
#include "birkhoff/errors.hpp"

namespace birkhoff {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

void write_line_plot_svg(std::ostream& os, const std::string& title,
                         const std::vector<PlotSeries>& series) {
  if (series.empty()) throw usage_error("write_line_plot_svg: no series");
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const PlotSeries& s : series) {
    if (s.x.empty() || s.x.size() != s.y.size())
      throw usage_error("write_line_plot_svg: empty or mismatched series '" + s.label + "'");
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) {
    ymax += 0.5;
    ymin -= 0.5;
  }
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  const auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
     << title << "</text>\n";
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kLeft << "\" y=\"" << kHeight - 18
     << "\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(xmin) << "</text>\n";
  os << "<text x=\"" << kLeft + pw << "\" y=\"" << kHeight - 18
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(xmax)
     << "</text>\n";
  os << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + ph
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(ymin)
     << "</text>\n";
  os << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 10
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << format_double(ymax)
     << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[s].x.size(); ++i) {
      if (i) os << ' ';
      os << format_double(px(series[s].x[i])) << ',' << format_double(py(series[s].y[i]));
    }
    os << "\"/>\n";
    os << "<text x=\"" << kLeft + 8 << "\" y=\"" << kTop + 16 + 14 * static_cast<double>(s)
       << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
       << series[s].label << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace birkhoff
