#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lpcrit::svg {

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;
};

struct HLine {
  double y = 0.0;
  std::string label;
};

// self-contained polyline chart; output is a pure function of the inputs
std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series,
                       const std::optional<HLine>& hline = std::nullopt);

}  // namespace lpcrit::svg
