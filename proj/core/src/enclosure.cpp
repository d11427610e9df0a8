#include "lpcrit/enclosure.hpp"

#include <cmath>
#include <stdexcept>

namespace lpcrit {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed-form";
    case Provenance::quadrature: return "quadrature";
    case Provenance::series_tail: return "series-tail";
    case Provenance::monte_carlo_estimate: return "monte-carlo-estimate";
  }
  return "unknown";
}

Enclosure make_enclosure(double lower, double upper, Provenance prov) {
  if (!std::isfinite(lower) || !std::isfinite(upper))
    throw std::invalid_argument("enclosure ends must be finite");
  if (lower > upper)
    throw std::invalid_argument("enclosure lower end exceeds upper end");
  return Enclosure{lower, upper, prov};
}

Enclosure exact_value(double v, Provenance prov) {
  if (!std::isfinite(v)) throw std::invalid_argument("enclosure value must be finite");
  const double slack = 4e-16 * std::fabs(v);
  return Enclosure{v - slack, v + slack, prov};
}

Enclosure add(const Enclosure& a, const Enclosure& b) {
  Provenance prov = a.provenance == b.provenance ? a.provenance : Provenance::series_tail;
  return make_enclosure(a.lower + b.lower, a.upper + b.upper, prov);
}

Enclosure scale(const Enclosure& a, double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("scale factor must be nonnegative");
  return make_enclosure(a.lower * c, a.upper * c, a.provenance);
}

Enclosure mul(const Enclosure& a, const Enclosure& b) {
  if (a.lower < 0.0 || b.lower < 0.0)
    throw std::invalid_argument("mul needs nonnegative enclosures");
  Provenance prov = a.provenance == b.provenance ? a.provenance : Provenance::series_tail;
  return make_enclosure(a.lower * b.lower, a.upper * b.upper * (1.0 + 4e-16), prov);
}

Enclosure pth_root(const Enclosure& a, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  if (a.lower < 0.0) throw std::invalid_argument("pth_root needs a nonnegative enclosure");
  const double lo = std::pow(a.lower, 1.0 / p);
  const double hi = std::pow(a.upper, 1.0 / p);
  // pow rounding slack, one ulp-scale inflation on each side
  return make_enclosure(lo * (1.0 - 4e-16), hi * (1.0 + 4e-16), a.provenance);
}

}  // namespace lpcrit
