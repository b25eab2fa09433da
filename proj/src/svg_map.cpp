#include <algorithm>
#include <cmath>
#include <cstdio>

#include "powerca/errors.hpp"
#include "powerca/io.hpp"

namespace powerca::io {

namespace {

constexpr double kWidth = 720.0;
constexpr double kMapHeight = 600.0;
constexpr double kStripHeight = 220.0;
constexpr double kMargin = 70.0;

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string axis_title(const Decomposition& d, std::size_t axis) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "Axis %zu (%.2f%%)", axis + 1, d.percent(axis));
  return buf;
}

struct Point {
  double x;
  double y;
  std::string label;
  bool row;
};

// [lo, hi] widened by 10% and always containing 0.
std::pair<double, double> padded_range(const std::vector<double>& xs) {
  double lo = 0.0, hi = 0.0;
  for (double x : xs) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  double pad = 0.1 * (hi - lo);
  if (pad == 0.0) pad = 1.0;
  return {lo - pad, hi + pad};
}

}  // namespace

std::string factor_map_svg(const Decomposition& d, std::size_t first_axis,
                           std::optional<std::size_t> second_axis) {
  // Axes are 1-based at this interface.
  const std::size_t n = d.axes.size();
  if (first_axis == 0 || first_axis > n) throw NotEnoughAxes(first_axis, n);
  if (second_axis && (*second_axis == 0 || *second_axis > n)) throw NotEnoughAxes(*second_axis, n);
  const std::size_t ax = first_axis - 1;
  const bool two_d = second_axis.has_value();
  const std::size_t ay_index = two_d ? *second_axis - 1 : 0;

  std::vector<Point> pts;
  const auto add = [&](const Vector& xs, const Vector* ys, const std::vector<std::string>& labels,
                       bool row) {
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
      const auto k = static_cast<std::size_t>(i);
      pts.push_back({xs(i), ys ? (*ys)(i) : 0.0,
                     k < labels.size() ? labels[k] : (row ? "R" : "C") + std::to_string(k + 1),
                     row});
    }
  };
  add(d.axes[ax].f, two_d ? &d.axes[ay_index].f : nullptr, d.row_labels, true);
  add(d.axes[ax].g, two_d ? &d.axes[ay_index].g : nullptr, d.col_labels, false);

  const double height = two_d ? kMapHeight : kStripHeight;
  std::vector<double> xs, ys;
  for (const auto& p : pts) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  const auto [x_lo, x_hi] = padded_range(xs);
  const auto [y_lo, y_hi] = padded_range(ys);
  const double plot_w = kWidth - 2.0 * kMargin;
  const double plot_h = height - 2.0 * kMargin;
  // One scale for both axes so distances are not distorted.
  double scale = plot_w / (x_hi - x_lo);
  if (two_d) scale = std::min(scale, plot_h / (y_hi - y_lo));
  const double cx = kMargin + 0.5 * plot_w - scale * 0.5 * (x_lo + x_hi);
  const double cy = two_d ? kMargin + 0.5 * plot_h + scale * 0.5 * (y_lo + y_hi) : height / 2.0;
  const auto px = [&](double x) { return cx + scale * x; };
  const auto py = [&](double y) { return cy - scale * y; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(kWidth) +
       "\" height=\"" + fixed(height) + "\" viewBox=\"0 0 " + fixed(kWidth) + " " + fixed(height) +
       "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + fixed(kWidth) + "\" height=\"" + fixed(height) +
       "\" fill=\"white\"/>\n";
  s += "<g stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4,3\">\n";
  s += "<line x1=\"" + fixed(kMargin) + "\" y1=\"" + fixed(cy) + "\" x2=\"" +
       fixed(kWidth - kMargin) + "\" y2=\"" + fixed(cy) + "\"/>\n";
  if (two_d)
    s += "<line x1=\"" + fixed(px(0.0)) + "\" y1=\"" + fixed(kMargin) + "\" x2=\"" +
         fixed(px(0.0)) + "\" y2=\"" + fixed(height - kMargin) + "\"/>\n";
  s += "</g>\n";

  s += "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#222222\">\n";
  s += "<text x=\"" + fixed(kWidth / 2.0) + "\" y=\"" + fixed(height - 20.0) +
       "\" text-anchor=\"middle\">" + escape(axis_title(d, ax)) + "</text>\n";
  if (two_d)
    s += "<text x=\"20\" y=\"" + fixed(height / 2.0) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         fixed(height / 2.0) + ")\">" + escape(axis_title(d, ay_index)) + "</text>\n";
  s += "</g>\n";

  s += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& p = pts[k];
    // Strip plots put rows above the line and columns below it.
    const double y = two_d ? py(p.y) : cy + (p.row ? -12.0 : 12.0);
    const std::string color = p.row ? "#1f4e9a" : "#b22222";
    if (p.row)
      s += "<circle cx=\"" + fixed(px(p.x)) + "\" cy=\"" + fixed(y) + "\" r=\"3.5\" fill=\"" +
           color + "\"/>\n";
    else
      s += "<rect x=\"" + fixed(px(p.x) - 3.5) + "\" y=\"" + fixed(y - 3.5) +
           "\" width=\"7\" height=\"7\" fill=\"" + color + "\"/>\n";
    s += "<text x=\"" + fixed(px(p.x) + 5.0) + "\" y=\"" + fixed(y - 5.0) + "\" fill=\"" + color +
         "\">" + escape(p.label) + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

void emit_map(const Decomposition& d, std::size_t first_axis,
              std::optional<std::size_t> second_axis, const std::filesystem::path& path) {
  write_text(path, factor_map_svg(d, first_axis, second_axis));
}

}  // namespace powerca::io
