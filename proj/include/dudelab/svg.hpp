#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dudelab/experiments.hpp"

namespace dudelab {

struct SvgSeries {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

enum class MetricFamily { Probabilities, SpectralEfficiency, EnergyEfficiency };

namespace detail {

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string svg_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

// Renders a fixed-size line chart. Returns nothing when fewer than two data
// points survive per series (a one-point "line" would be misleading). Output
// bytes are a pure function of the inputs.
inline std::optional<std::string> svg_line_chart(const std::string& title,
                                                 const std::string& x_label,
                                                 const std::string& y_label,
                                                 std::vector<SvgSeries> series) {
  series.erase(std::remove_if(series.begin(), series.end(),
                              [](const SvgSeries& s) { return s.points.size() < 2; }),
               series.end());
  if (series.empty()) return std::nullopt;

  double x_min = 1e308, x_max = -1e308, y_min = 1e308, y_max = -1e308;
  for (const SvgSeries& s : series) {
    for (const auto& [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_max == x_min) {
    x_min -= 1.0;
    x_max += 1.0;
  }
  if (y_max == y_min) {
    const double pad = y_max == 0.0 ? 1.0 : std::abs(y_max) * 0.1;
    y_min -= pad;
    y_max += pad;
  } else {
    const double pad = (y_max - y_min) * 0.05;
    y_min -= pad;
    y_max += pad;
  }

  constexpr double kW = 760, kH = 480;
  constexpr double kLeft = 80, kRight = 590, kTop = 48, kBottom = 430;
  const auto sx = [&](double x) {
    return kLeft + (x - x_min) / (x_max - x_min) * (kRight - kLeft);
  };
  const auto sy = [&](double y) {
    return kBottom - (y - y_min) / (y_max - y_min) * (kBottom - kTop);
  };

  static constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                             "#ff7f0e", "#8c564b", "#17becf", "#e377c2",
                                             "#bcbd22", "#7f7f7f", "#aec7e8", "#ff9896"};
  constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::svg_num(kW) +
         "\" height=\"" + detail::svg_num(kH) + "\" viewBox=\"0 0 " + detail::svg_num(kW) + " " +
         detail::svg_num(kH) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + detail::svg_num((kLeft + kRight) / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         detail::xml_escape(title) + "</text>\n";

  for (int i = 0; i <= 5; ++i) {
    const double fx = x_min + (x_max - x_min) * i / 5.0;
    const double fy = y_min + (y_max - y_min) * i / 5.0;
    const std::string gx = detail::svg_num(sx(fx));
    const std::string gy = detail::svg_num(sy(fy));
    svg += "<line x1=\"" + gx + "\" y1=\"" + detail::svg_num(kTop) + "\" x2=\"" + gx + "\" y2=\"" +
           detail::svg_num(kBottom) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + detail::svg_num(kLeft) + "\" y1=\"" + gy + "\" x2=\"" +
           detail::svg_num(kRight) + "\" y2=\"" + gy +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + gx + "\" y=\"" + detail::svg_num(kBottom + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
           detail::svg_label(fx) + "</text>\n";
    svg += "<text x=\"" + detail::svg_num(kLeft - 8) + "\" y=\"" + detail::svg_num(sy(fy) + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
           detail::svg_label(fy) + "</text>\n";
  }
  svg += "<rect x=\"" + detail::svg_num(kLeft) + "\" y=\"" + detail::svg_num(kTop) + "\" width=\"" +
         detail::svg_num(kRight - kLeft) + "\" height=\"" + detail::svg_num(kBottom - kTop) +
         "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  svg += "<text x=\"" + detail::svg_num((kLeft + kRight) / 2) + "\" y=\"" +
         detail::svg_num(kH - 10) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
         detail::xml_escape(x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"" + detail::svg_num((kTop + kBottom) / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 20 " +
         detail::svg_num((kTop + kBottom) / 2) + ")\">" + detail::xml_escape(y_label) +
         "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % kPaletteSize];
    std::string pts;
    for (const auto& [x, y] : series[i].points) {
      if (!pts.empty()) pts += ' ';
      pts += detail::svg_num(sx(x)) + "," + detail::svg_num(sy(y));
    }
    svg += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"2\"/>\n";
    const double ly = kTop + 10 + 18.0 * static_cast<double>(i);
    svg += "<line x1=\"" + detail::svg_num(kRight + 12) + "\" y1=\"" + detail::svg_num(ly) +
           "\" x2=\"" + detail::svg_num(kRight + 34) + "\" y2=\"" + detail::svg_num(ly) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + detail::svg_num(kRight + 40) + "\" y=\"" + detail::svg_num(ly + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + detail::xml_escape(series[i].name) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

namespace detail {

inline std::string sweep_axis_label(const std::string& key) {
  if (key == "q_ratio_db") return "UL power ratio macro/small (dB)";
  if (key == "lambda_ratio") return "small/macro density ratio";
  if (key == "q_m_dbm") return "macro UL power (dBm)";
  if (key == "q_s_dbm") return "small-cell UL power (dBm)";
  return key;
}

}  // namespace detail

// One chart per metric family for a sweep. Lines are (scenario x metric);
// all-zero lines (structurally absent branches) are dropped.
inline std::optional<std::string> sweep_svg(const SweepResult& result, MetricFamily family) {
  std::vector<SvgSeries> series;
  const auto add_metric = [&](const char* label, auto getter) {
    for (Scenario sc : result.spec.scenarios) {
      SvgSeries s;
      s.name = std::string(scenario_name(sc)) + " " + label;
      bool any_nonzero = false;
      for (const SweepRow& r : result.rows) {
        if (r.scenario != sc || r.failed) continue;
        const double y = getter(r);
        any_nonzero = any_nonzero || y != 0.0;
        s.points.emplace_back(r.value, y);
      }
      if (any_nonzero) series.push_back(std::move(s));
    }
  };

  std::string title, y_label;
  switch (family) {
    case MetricFamily::Probabilities:
      title = "association probabilities";
      y_label = "probability";
      add_metric("case1", [](const SweepRow& r) { return r.pr.case1; });
      add_metric("case2", [](const SweepRow& r) { return r.pr.case2; });
      add_metric("case4", [](const SweepRow& r) { return r.pr.case4; });
      break;
    case MetricFamily::SpectralEfficiency:
      title = "spectral efficiency";
      y_label = "spectral efficiency (bit/s/Hz)";
      add_metric("case1", [](const SweepRow& r) { return r.se_case1; });
      add_metric("case2", [](const SweepRow& r) { return r.se_case2; });
      add_metric("case4", [](const SweepRow& r) { return r.se_case4; });
      add_metric("average", [](const SweepRow& r) { return r.se_avg; });
      break;
    case MetricFamily::EnergyEfficiency:
      title = "energy efficiency";
      y_label = "energy efficiency (bit/J)";
      add_metric("case1", [](const SweepRow& r) { return r.ee_case1; });
      add_metric("case2", [](const SweepRow& r) { return r.ee_case2; });
      add_metric("case4", [](const SweepRow& r) { return r.ee_case4; });
      add_metric("average", [](const SweepRow& r) { return r.ee_avg; });
      break;
  }
  return svg_line_chart(title, detail::sweep_axis_label(result.spec.key), y_label,
                        std::move(series));
}

}  // namespace dudelab
