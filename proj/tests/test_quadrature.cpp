#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lpcrit/quadrature.hpp"

using namespace lpcrit;

namespace {

constexpr double kPi = std::numbers::pi;

// oracle: composite Simpson over [lo, hi]
double simpson(double lo, double hi, const std::function<double(double)>& f,
               int cells = 80000) {
  const double h = (hi - lo) / cells;
  double sum = f(lo) + f(hi);
  for (int i = 1; i < cells; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("rigorous blocked integral encloses a smooth integrand") {
  auto f = [](double x) { return x * x; };
  auto info = [](double, double v) { return CellBounds{v * v, 2.0 * v}; };
  const Enclosure e = rigorous_blocked_integral(f, info, {0.0, 0.5, 1.0}, 1e-6);
  CHECK(e.lower <= 1.0 / 3.0);
  CHECK(e.upper >= 1.0 / 3.0);
  CHECK(e.width() < 1e-4);
}

TEST_CASE("adaptive simpson helper") {
  CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, kPi) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(adaptive_simpson([](double x) { return std::exp(-x * x); }, -6.0, 6.0) ==
        doctest::Approx(std::sqrt(kPi)).epsilon(1e-9));
}

TEST_CASE("radial profile mass against closed forms") {
  // d = 0: empty product of coordinates, mass is exactly 1
  const Enclosure e0 = radial_profile_mass(0, 3.0);
  CHECK(e0.lower == 1.0);
  CHECK(e0.upper == 1.0);

  // d = 1, q = 1: integral of 1/(1+x^2) over R is pi
  const Enclosure e1 = radial_profile_mass(1, 1.0);
  CHECK(e1.lower <= kPi);
  CHECK(e1.upper >= kPi);
  CHECK(e1.width() < 1e-2);  // tail only decays like 1/X here

  // d = 2, q = 2: 2*pi * int r (1+r^2)^-2 dr = pi
  const Enclosure e2 = radial_profile_mass(2, 2.0);
  CHECK(e2.lower <= kPi);
  CHECK(e2.upper >= kPi);

  // d = 3, q = 2: 4*pi * int r^2 (1+r^2)^-2 dr = pi^2
  const Enclosure e3 = radial_profile_mass(3, 2.0);
  CHECK(e3.lower <= kPi * kPi);
  CHECK(e3.upper >= kPi * kPi);
  CHECK(e3.width() / (kPi * kPi) < 1e-2);

  CHECK_THROWS_AS(radial_profile_mass(2, 1.0), std::domain_error);  // q <= d/2
}

TEST_CASE("profile sine mass encloses the oracle") {
  const double a = 2.0, s = 1.5, p = 2.0;
  auto f = [&](double x) {
    return std::pow(std::fabs(std::sin(s * x)) * std::pow(1.0 + std::fabs(x), -a), p);
  };
  const double head = simpson(-60.0, 60.0, f);
  const double tail = 2.0 * std::pow(61.0, 1.0 - a * p) / (a * p - 1.0);
  const Enclosure e = profile_sine_mass(a, s, p);
  CHECK(e.lower <= head + tail);
  CHECK(e.upper >= head);
  CHECK(e.width() / e.upper < 0.02);
  CHECK_THROWS_AS(profile_sine_mass(0.4, 1.0, 2.0), std::domain_error);  // a*p <= 1
}

TEST_CASE("profile shift mass encloses the oracle") {
  const double a = 2.0, t = 0.7, p = 2.0;
  auto prof = [&](double x) { return std::pow(1.0 + std::fabs(x), -a); };
  auto f = [&](double x) { return std::pow(std::fabs(prof(x + t) - prof(x)), p); };
  const double head = simpson(-80.0, 80.0, f);
  const Enclosure e = profile_shift_mass(a, t, p);
  CHECK(e.lower <= head * 1.001 + 1e-12);
  CHECK(e.upper >= head);
  CHECK(e.width() / e.upper < 0.05);
}

TEST_CASE("reciprocal sine mass encloses the oracle") {
  const double s = 2.0, p = 2.0;
  auto f = [&](double x) { return std::pow(std::fabs(std::sin(s * x)) / x, p); };
  const double oracle = simpson(1e-9, 1.0, f);  // integrand extends continuously to 0
  const Enclosure e = recip_sine_mass(s, p);
  CHECK(e.lower <= oracle + 1e-6);
  CHECK(e.upper >= oracle - 1e-6);
  CHECK(e.width() / e.upper < 0.01);
}
