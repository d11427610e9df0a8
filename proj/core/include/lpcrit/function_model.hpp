#pragma once

#include <vector>

namespace lpcrit {

// concrete one-dimensional test functions with known closed-form data
struct TestFunction1D {
  enum class Kind { zero, const_one, box, power_profile, recip_unit };
  Kind kind = Kind::zero;
  double c = 0.0, d = 0.0;  // box support [c, d]
  double a = 0.0;           // profile exponent

  double operator()(double x) const;

  static TestFunction1D zero();
  static TestFunction1D one();
  static TestFunction1D box(double c, double d);
  // (1 + |x|)^(-a), a > 0
  static TestFunction1D power_profile(double a);
  // 1/x on (0, 1], 0 elsewhere
  static TestFunction1D recip_unit();
};

// disjoint unit bumps 1_{[k*pi, k*pi + size(k)]} summed over integer k
struct IntervalFamily1D {
  double a0;     // size at k = 0
  double coeff;  // size(k) = coeff / |k| otherwise

  double size(long long k) const;
  double eval(double x) const;

  static IntervalFamily1D harmonic_pi();  // sizes 1/4 and 1/(5|k|)
};

// phi(x) = (1 + |x|^2)^(-q) on R^d; smooth, radial, everywhere positive
struct RadialProfile {
  int d = 1;
  double q = 1.0;
  double eval(const std::vector<double>& x) const;
};

// disjoint corner-simplex bumps of dimension m sitting on the integer
// lattice stretched by per-axis spacings; the bump at lambda has size
// r = scale * (1 + |lambda|_1)^(-decay)
struct SimplexFamily {
  int m = 1;
  std::vector<double> spacing;
  double scale = 1.0;
  double decay = 1.0;

  double size(long long layer) const;
  // x has exactly m coordinates
  double eval(const std::vector<double>& x) const;
  void validate() const;
};

}  // namespace lpcrit
