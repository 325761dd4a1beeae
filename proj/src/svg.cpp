#include "sgl/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sgl/textio.hpp"

namespace sgl {

namespace {

constexpr double kWidth = 840.0, kHeight = 600.0;
constexpr double kLeft = 80.0, kRight = 30.0, kTop = 50.0, kBottom = 60.0;

std::string px(double v) { return format_fixed(v, 2); }

}  // namespace

std::string render_loglog_svg(const std::string& title, const std::string& x_label,
                              const std::string& y_label,
                              const std::vector<SvgSeries>& series) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (const auto& p : s.points) {
            if (!(p[0] > 0.0) || !(p[1] > 0.0)) continue;
            xmin = std::min(xmin, p[0]);
            xmax = std::max(xmax, p[0]);
            ymin = std::min(ymin, p[1]);
            ymax = std::max(ymax, p[1]);
        }
    if (!(xmin < xmax)) xmax = 10.0 * (xmin = 1.0);
    if (!(ymin < ymax)) ymax = 10.0 * (ymin = std::min(ymin, 1.0));

    const double lx0 = std::log10(xmin), lx1 = std::log10(xmax);
    const double ly0 = std::log10(ymin), ly1 = std::log10(ymax);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double x) {
        return kLeft + plot_w * (std::log10(x) - lx0) / (lx1 - lx0);
    };
    auto sy = [&](double y) {
        return kTop + plot_h * (1.0 - (std::log10(y) - ly0) / (ly1 - ly0));
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) +
           "\" height=\"" + px(kHeight) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + px(kWidth / 2) + "\" y=\"28\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";

    // frame
    out += "<rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" +
           px(plot_w) + "\" height=\"" + px(plot_h) +
           "\" fill=\"none\" stroke=\"black\"/>\n";

    // decade ticks
    for (int d = int(std::ceil(lx0)); d <= int(std::floor(lx1)); ++d) {
        const double x = sx(std::pow(10.0, d));
        out += "<line x1=\"" + px(x) + "\" y1=\"" + px(kTop + plot_h) + "\" x2=\"" +
               px(x) + "\" y2=\"" + px(kTop + plot_h + 6) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + px(x) + "\" y=\"" + px(kTop + plot_h + 22) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
               "1e" + std::to_string(d) + "</text>\n";
    }
    for (int d = int(std::ceil(ly0)); d <= int(std::floor(ly1)); ++d) {
        const double y = sy(std::pow(10.0, d));
        out += "<line x1=\"" + px(kLeft - 6) + "\" y1=\"" + px(y) + "\" x2=\"" +
               px(kLeft) + "\" y2=\"" + px(y) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + px(kLeft - 10) + "\" y=\"" + px(y + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
               "1e" + std::to_string(d) + "</text>\n";
    }
    out += "<text x=\"" + px(kLeft + plot_w / 2) + "\" y=\"" + px(kHeight - 14) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
           x_label + "</text>\n";
    out += "<text x=\"20\" y=\"" + px(kTop + plot_h / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 20 " + px(kTop + plot_h / 2) + ")\">" +
           y_label + "</text>\n";

    double legend_y = kTop + 16.0;
    for (const auto& s : series) {
        std::string pts;
        for (const auto& p : s.points) {
            if (!(p[0] > 0.0) || !(p[1] > 0.0)) continue;
            if (!pts.empty()) pts += ' ';
            pts += px(sx(p[0])) + "," + px(sy(p[1]));
        }
        if (pts.empty()) continue;
        out += "<polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        out += "<line x1=\"" + px(kLeft + plot_w - 150) + "\" y1=\"" + px(legend_y) +
               "\" x2=\"" + px(kLeft + plot_w - 126) + "\" y2=\"" + px(legend_y) +
               "\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"/>\n";
        out += "<text x=\"" + px(kLeft + plot_w - 120) + "\" y=\"" + px(legend_y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + s.label +
               "</text>\n";
        legend_y += 18.0;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace sgl
