#pragma once

#include <string>
#include <utility>
#include <vector>

// Minimal self-contained SVG scatter/line plot with fixed number formatting,
// so identical data gives identical files.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color);
  void points(const std::vector<std::pair<double, double>>& pts, const std::string& color, double radius = 3);
  void label(double x, double y, const std::string& text);

  std::string render() const;

 private:
  struct Series {
    std::vector<std::pair<double, double>> pts;
    std::string color;
    bool line = false;
    double radius = 0;
  };
  std::string title_, x_label_, y_label_;
  std::vector<Series> series_;
  std::vector<std::pair<std::pair<double, double>, std::string>> labels_;
};
