#include "mamab/cli/svg_chart.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace mamab::cli {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 210.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double x, const char* fmt = "%.2f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

}  // namespace

std::string render_error_chart(const SweepResult& sweep) {
  std::size_t horizon = 1;
  double y_max = 0.0;
  for (const auto& s : sweep.strategies) {
    horizon = std::max(horizon, s.mean_error.size());
    for (double e : s.mean_error) y_max = std::max(y_max, e);
  }
  if (y_max <= 0.0) y_max = 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double x_span = horizon > 1 ? static_cast<double>(horizon - 1) : 1.0;
  auto px = [&](double t) { return kLeft + (t - 1.0) / x_span * plot_w; };
  auto py = [&](double e) { return kTop + (1.0 - e / y_max) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth, "%.0f") + "\" height=\"" +
         num(kHeight, "%.0f") + "\" viewBox=\"0 0 " + num(kWidth, "%.0f") + " " + num(kHeight, "%.0f") +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes and ticks.
  svg += "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop + plot_h) + "\" x2=\"" + num(kLeft + plot_w) +
         "\" y2=\"" + num(kTop + plot_h) + "\"/>\n";
  svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
         num(kTop + plot_h) + "\"/>\n";
  svg += "</g>\n<g fill=\"black\">\n";
  for (int k = 0; k <= 5; ++k) {
    const double t = 1.0 + x_span * k / 5.0;
    const double e = y_max * k / 5.0;
    svg += "<text x=\"" + num(px(t)) + "\" y=\"" + num(kTop + plot_h + 18) + "\" text-anchor=\"middle\">" +
           num(t, "%.0f") + "</text>\n";
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(e) + 4) + "\" text-anchor=\"end\">" +
           num(e, "%.3g") + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 15) +
         "\" text-anchor=\"middle\">timestep t</text>\n";
  svg += "<text x=\"18\" y=\"" + num(kTop + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         num(kTop + plot_h / 2) + ")\">team mean best-arm error</text>\n";
  svg += "</g>\n";

  for (std::size_t i = 0; i < sweep.strategies.size(); ++i) {
    const auto& s = sweep.strategies[i];
    const char* color = kPalette[i % std::size(kPalette)];
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t t = 0; t < s.mean_error.size(); ++t) {
      if (t) svg += ' ';
      svg += num(px(static_cast<double>(t + 1))) + "," + num(py(s.mean_error[t]));
    }
    svg += "\"/>\n";
    if (s.convergence_time) {
      const double x = px(static_cast<double>(*s.convergence_time));
      svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(x) + "\" y2=\"" +
             num(kTop + plot_h) + "\" stroke=\"" + color + "\" stroke-dasharray=\"6,4\"/>\n";
    }
    const double ly = kTop + 10 + 20.0 * static_cast<double>(i);
    const double lx = kLeft + plot_w + 15;
    svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 24) + "\" y2=\"" + num(ly) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) + "\">" + std::string(s.strategy.name()) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace mamab::cli
