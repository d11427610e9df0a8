#include "lpcrit/function_model.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace lpcrit {

double TestFunction1D::operator()(double x) const {
  switch (kind) {
    case Kind::zero:
      return 0.0;
    case Kind::const_one:
      return 1.0;
    case Kind::box:
      return (x >= c && x <= d) ? 1.0 : 0.0;
    case Kind::power_profile:
      return std::pow(1.0 + std::fabs(x), -a);
    case Kind::recip_unit:
      return (x > 0.0 && x <= 1.0) ? 1.0 / x : 0.0;
  }
  return 0.0;
}

TestFunction1D TestFunction1D::zero() { return {}; }

TestFunction1D TestFunction1D::one() {
  TestFunction1D f;
  f.kind = Kind::const_one;
  return f;
}

TestFunction1D TestFunction1D::box(double c, double d) {
  if (!(c <= d)) throw std::invalid_argument("box support is inverted");
  TestFunction1D f;
  f.kind = Kind::box;
  f.c = c;
  f.d = d;
  return f;
}

TestFunction1D TestFunction1D::power_profile(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("profile exponent must be positive");
  TestFunction1D f;
  f.kind = Kind::power_profile;
  f.a = a;
  return f;
}

TestFunction1D TestFunction1D::recip_unit() {
  TestFunction1D f;
  f.kind = Kind::recip_unit;
  return f;
}

double IntervalFamily1D::size(long long k) const {
  return k == 0 ? a0 : coeff / static_cast<double>(std::llabs(k));
}

double IntervalFamily1D::eval(double x) const {
  constexpr double pi = std::numbers::pi;
  const auto k = static_cast<long long>(std::llround(x / pi));
  const double u = x - static_cast<double>(k) * pi;
  return (u >= 0.0 && u <= size(k)) ? 1.0 : 0.0;
}

IntervalFamily1D IntervalFamily1D::harmonic_pi() { return {0.25, 0.2}; }

double RadialProfile::eval(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != d) throw std::invalid_argument("dimension mismatch");
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return std::pow(1.0 + r2, -q);
}

double SimplexFamily::size(long long layer) const {
  return scale * std::pow(1.0 + static_cast<double>(layer), -decay);
}

void SimplexFamily::validate() const {
  if (m < 1) throw std::invalid_argument("lattice dimension must be at least 1");
  if (static_cast<int>(spacing.size()) != m)
    throw std::invalid_argument("spacing count must match dimension");
  if (!(decay > 0.0)) throw std::invalid_argument("decay must be positive");
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  for (double s : spacing)
    if (!(s >= scale))
      throw std::invalid_argument("bump size exceeds lattice spacing");
}

double SimplexFamily::eval(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != m) throw std::invalid_argument("dimension mismatch");
  // locate the lattice site whose corner simplex could contain x
  long long layer = 0;
  double excess = 0.0;
  for (int i = 0; i < m; ++i) {
    const double ratio = x[i] / spacing[i];
    auto site = static_cast<long long>(std::floor(ratio));
    const double u = x[i] - static_cast<double>(site) * spacing[i];
    // the bump extends at most `scale` past the corner, never to the next site
    if (u > scale) return 0.0;
    layer += std::llabs(site);
    excess += u;
  }
  return excess <= size(layer) ? 1.0 : 0.0;
}

}  // namespace lpcrit
