#include "lpcrit/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace lpcrit {

namespace {

void validate(int n, double a) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (!(a >= 0.0) || !std::isfinite(a)) throw std::invalid_argument("side must be finite and nonnegative");
}

}  // namespace

double simplex_volume(int n, double a) {
  validate(n, a);
  double v = 1.0;
  for (int i = 1; i <= n; ++i) v *= a / static_cast<double>(i);
  return v;
}

double simplex_moment(int n, double a, double p) {
  validate(n, a);
  if (!(p >= 0.0)) throw std::invalid_argument("moment order must be nonnegative");
  // Gamma(p+1)/Gamma(n+p+1) collapses to a finite product for any real p
  double v = std::pow(a, p);
  for (int i = 1; i <= n; ++i) v *= a / (p + static_cast<double>(i));
  return v;
}

}  // namespace lpcrit
