#ifndef SGL_SVG_HPP
#define SGL_SVG_HPP

#include <array>
#include <string>
#include <vector>

namespace sgl {

struct SvgSeries {
    std::string label;
    std::string color;
    std::vector<std::array<double, 2>> points;  // (x, y), only y > 0 plotted
};

/// Minimal self-contained log-log line chart: one polyline per series,
/// decade ticks, axis labels and a legend.  Nonpositive values are skipped.
std::string render_loglog_svg(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<SvgSeries>& series);

}  // namespace sgl

#endif
