#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lpcrit::svg {

namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

std::string fmt(double v, int prec = 6) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

struct Range {
  double lo = 0, hi = 1;
  double span() const { return hi - lo; }
};

Range data_range(const std::vector<Series>& series, bool x_axis,
                 const std::optional<HLine>& hline) {
  Range r{1e300, -1e300};
  for (const Series& s : series)
    for (const auto& [x, y] : s.points) {
      const double v = x_axis ? x : y;
      r.lo = std::min(r.lo, v);
      r.hi = std::max(r.hi, v);
    }
  if (!x_axis && hline) {
    r.lo = std::min(r.lo, hline->y);
    r.hi = std::max(r.hi, hline->y);
  }
  if (r.lo > r.hi) r = {0, 1};
  if (r.lo == r.hi) {
    r.lo -= 0.5;
    r.hi += 0.5;
  }
  if (!x_axis) {  // breathing room above and below the curves
    const double pad = 0.05 * r.span();
    r.lo -= pad;
    r.hi += pad;
  }
  return r;
}

}  // namespace

std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series,
                       const std::optional<HLine>& hline) {
  if (series.empty()) throw std::invalid_argument("chart needs at least one series");
  const Range xr = data_range(series, true, std::nullopt);
  const Range yr = data_range(series, false, hline);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / xr.span() * pw; };
  auto py = [&](double y) { return kTop + ph - (y - yr.lo) / yr.span() * ph; };

  std::ostringstream os;
  os.precision(8);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  os << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"15\">"
     << title << "</text>\n";

  // frame and ticks
  os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
     << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = xr.lo + xr.span() * i / 5.0;
    const double fy = yr.lo + yr.span() * i / 5.0;
    const double gx = px(fx), gy = py(fy);
    os << "<line x1=\"" << gx << "\" y1=\"" << kTop + ph << "\" x2=\"" << gx << "\" y2=\""
       << kTop + ph + 5 << "\" stroke=\"#444\"/>\n";
    os << "<text x=\"" << gx << "\" y=\"" << kTop + ph + 18
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt(fx, 4) << "</text>\n";
    os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << gy << "\" x2=\"" << kLeft
       << "\" y2=\"" << gy << "\" stroke=\"#444\"/>\n";
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << gy + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt(fy, 4) << "</text>\n";
  }
  os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
     << x_label << "</text>\n";
  os << "<text x=\"16\" y=\"" << kTop + ph / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        "transform=\"rotate(-90 16 "
     << kTop + ph / 2 << ")\">" << y_label << "</text>\n";

  if (hline) {
    const double gy = py(hline->y);
    os << "<line x1=\"" << kLeft << "\" y1=\"" << gy << "\" x2=\"" << kLeft + pw
       << "\" y2=\"" << gy << "\" stroke=\"#999\" stroke-dasharray=\"6 4\"/>\n";
    os << "<text x=\"" << kLeft + pw - 4 << "\" y=\"" << gy - 5
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
          "fill=\"#666\">"
       << hline->label << "</text>\n";
  }

  for (const Series& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.points) os << fmt(px(x), 7) << "," << fmt(py(y), 7) << " ";
    os << "\"/>\n";
  }

  double ly = kTop + 14;
  for (const Series& s : series) {
    os << "<rect x=\"" << kLeft + 10 << "\" y=\"" << ly - 9
       << "\" width=\"12\" height=\"4\" fill=\"" << s.color << "\"/>\n";
    os << "<text x=\"" << kLeft + 28 << "\" y=\"" << ly
       << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label << "</text>\n";
    ly += 16;
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace lpcrit::svg
