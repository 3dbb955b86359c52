#include "godisc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "godisc/error.hpp"

namespace godisc {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Range {
  double lo;
  double hi;
};

Range padded_range(const Eigen::Ref<const VectorXd>& values) {
  double lo = values.minCoeff();
  double hi = values.maxCoeff();
  if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

}  // namespace

std::string render_scatter_svg(const ScatterPlot& plot) {
  if (plot.points.cols() != 2) throw Error(ErrorCode::ShapeMismatch, "scatter plot needs two columns");
  if (static_cast<std::size_t>(plot.points.rows()) != plot.labels.size()) {
    throw Error(ErrorCode::ShapeMismatch, "label count does not match point count");
  }
  if (plot.points.rows() == 0) throw Error(ErrorCode::InvalidArgument, "no points to plot");

  const double left = 70, right = 20, top = 40, bottom = 55;
  const double w = plot.width, h = plot.height;
  const double pw = w - left - right, ph = h - top - bottom;
  const Range xr = padded_range(plot.points.col(0));
  const Range yr = padded_range(plot.points.col(1));
  const auto sx = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto sy = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(plot.width) + "\" height=\"" +
       std::to_string(plot.height) + "\" viewBox=\"0 0 " + std::to_string(plot.width) + " " +
       std::to_string(plot.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!plot.title.empty()) {
    s += "<text x=\"" + num(w / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(plot.title) + "</text>\n";
  }
  s += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
       "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double yv = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    const double px = sx(xv), py = sy(yv);
    s += "<line x1=\"" + num(px) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(px) + "\" y2=\"" +
         num(top + ph + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(px) + "\" y=\"" + num(top + ph + 18) + "\" text-anchor=\"middle\">" + tick(xv) +
         "</text>\n";
    s += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(left) + "\" y2=\"" + num(py) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(left - 8) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\">" + tick(yv) +
         "</text>\n";
  }
  if (!plot.x_label.empty()) {
    s += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(h - 12) + "\" text-anchor=\"middle\">" +
         escape(plot.x_label) + "</text>\n";
  }
  if (!plot.y_label.empty()) {
    s += "<text x=\"16\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(top + ph / 2) + ")\">" + escape(plot.y_label) + "</text>\n";
  }

  s += "<g fill-opacity=\"0.75\">\n";
  for (Eigen::Index i = 0; i < plot.points.rows(); ++i) {
    const auto label = static_cast<std::size_t>(plot.labels[static_cast<std::size_t>(i)]);
    s += "<circle cx=\"" + num(sx(plot.points(i, 0))) + "\" cy=\"" + num(sy(plot.points(i, 1))) +
         "\" r=\"3\" fill=\"" + kPalette[label % std::size(kPalette)] + "\"/>\n";
  }
  s += "</g>\n";

  std::size_t n_classes = plot.class_names.size();
  for (int l : plot.labels) n_classes = std::max(n_classes, static_cast<std::size_t>(l) + 1);
  s += "<g>\n";
  for (std::size_t c = 0; c < n_classes; ++c) {
    const double y = top + 12 + 16.0 * static_cast<double>(c);
    const std::string name = c < plot.class_names.size() ? plot.class_names[c] : std::to_string(c);
    s += "<circle cx=\"" + num(left + pw - 110) + "\" cy=\"" + num(y) + "\" r=\"4\" fill=\"" +
         kPalette[c % std::size(kPalette)] + "\"/>\n";
    s += "<text x=\"" + num(left + pw - 100) + "\" y=\"" + num(y + 4) + "\">" + escape(name) + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace godisc
