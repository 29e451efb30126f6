#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 56;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else
      out += c;
  }
  return out;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgPlot::polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color) {
  series_.push_back({pts, color, true, 0});
}

void SvgPlot::points(const std::vector<std::pair<double, double>>& pts, const std::string& color, double radius) {
  series_.push_back({pts, color, false, radius});
}

void SvgPlot::label(double x, double y, const std::string& text) { labels_.push_back({{x, y}, text}); }

std::string SvgPlot::render() const {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series_)
    for (const auto& [x, y] : s.pts) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  if (!(x0 <= x1)) x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  if (x1 - x0 < 1e-12) x0 -= 1, x1 += 1;
  if (y1 - y0 < 1e-12) y0 -= 1, y1 += 1;
  const double px = (x1 - x0) * 0.05, py = (y1 - y0) * 0.05;
  x0 -= px, x1 += px, y0 -= py, y1 += py;
  auto sx = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto sy = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
                    num(kHeight) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(kWidth - 2 * kMargin) +
         "\" height=\"" + num(kHeight - 2 * kMargin) + "\" fill=\"none\" stroke=\"#888\"/>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">" + escape(title_) + "</text>\n";
  out += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 14) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + escape(x_label_) + " [" +
         num(x0) + ", " + num(x1) + "]</text>\n";
  out += "<text x=\"14\" y=\"" + num(kHeight / 2) + "\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 14 " + num(kHeight / 2) + ")\" text-anchor=\"middle\">" + escape(y_label_) +
         " [" + num(y0) + ", " + num(y1) + "]</text>\n";
  for (const auto& s : series_) {
    if (s.line) {
      out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"";
      for (const auto& [x, y] : s.pts)
        if (std::isfinite(x) && std::isfinite(y)) out += num(sx(x)) + "," + num(sy(y)) + " ";
      out += "\"/>\n";
    } else {
      for (const auto& [x, y] : s.pts)
        if (std::isfinite(x) && std::isfinite(y))
          out += "<circle cx=\"" + num(sx(x)) + "\" cy=\"" + num(sy(y)) + "\" r=\"" + num(s.radius) +
                 "\" fill=\"" + s.color + "\"/>\n";
    }
  }
  for (const auto& [p, text] : labels_)
    out += "<text x=\"" + num(sx(p.first) + 5) + "\" y=\"" + num(sy(p.second) - 5) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(text) + "</text>\n";
  out += "</svg>\n";
  return out;
}
