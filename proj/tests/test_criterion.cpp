#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lpcrit/criterion.hpp"
#include "lpcrit/quadrature.hpp"

using namespace lpcrit;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("quantization report locates the product") {
  const auto r = check_quantization(pi / 2.0, 1.0);
  CHECK(r.product == doctest::Approx(pi / 2.0));
  CHECK(r.distance == doctest::Approx(pi / 2.0));
  CHECK(!r.violated);

  const auto on = check_quantization(pi, 1.0);
  CHECK(on.nearest == 1);
  CHECK(on.distance < 1e-12);
  CHECK(on.violated);

  // a zero frequency kills the sine data, so the product sits on the lattice
  CHECK(check_quantization(2.0, 0.0).violated);

  CHECK_THROWS_AS(check_quantization(1.0, 1.0, 0.0), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(check_quantization(inf, 1.0), std::invalid_argument);
}

TEST_CASE("decomposition splits the product and sizes the window") {
  const auto d = build_decomposition(pi / 2.0, 1.0);
  CHECK(d.whole == 0);
  CHECK(d.tau == doctest::Approx(pi / 2.0));
  CHECK(d.delta == doctest::Approx(pi / 8.0));
  CHECK(d.multiplier_bound == doctest::Approx(1.0 / std::sin(d.delta)));
  CHECK(d.check.separated);
  CHECK(d.check.points == 125);
  CHECK(d.check.min_distance >= d.delta * (1.0 - 1e-9));

  const auto e = build_decomposition(7.0, 1.0);
  CHECK(e.whole == 2);
  CHECK(e.tau == doctest::Approx(7.0 - 2.0 * pi));
  CHECK(e.delta == doctest::Approx((7.0 - 2.0 * pi) / 4.0));
}

TEST_CASE("explicit window widths are validated") {
  const auto d = build_decomposition(pi / 2.0, 1.0, 0.05);
  CHECK(d.delta == 0.05);
  CHECK(d.multiplier_bound == doctest::Approx(1.0 / std::sin(0.05)));

  CHECK_THROWS_AS(build_decomposition(pi / 2.0, 1.0, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(build_decomposition(pi / 2.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("lattice products are refused with a full report") {
  try {
    build_decomposition(-2.0 * pi, 1.0);
    FAIL("expected a refusal");
  } catch (const QuantizationError& err) {
    CHECK(err.report.nearest == -2);
    CHECK(err.report.violated);
    CHECK(std::string(err.what()).find("no finite bound") != std::string::npos);
  }
}

TEST_CASE("near-lattice products blow up like the reciprocal window") {
  const auto d = build_decomposition(pi + 1e-6, 1.0);
  CHECK(d.whole == 1);
  CHECK(d.tau == doctest::Approx(1e-6).epsilon(1e-3));
  CHECK(d.delta == doctest::Approx(2.5e-7).epsilon(1e-3));
  CHECK(d.multiplier_bound == doctest::Approx(1.0 / std::sin(d.delta)));
  CHECK(d.multiplier_bound > 3.9e6);
}

TEST_CASE("box norms match the closed forms") {
  const auto n = norms_for_box(0.0, 1.0, pi / 2.0, 1.0, 2.0);
  // symmetric difference has length 2*min(|t|, d-c) = 2
  CHECK(n.shift_norm.upper == doctest::Approx(std::sqrt(2.0)));
  CHECK(n.shift_norm.lower <= n.shift_norm.upper);
  const double sine_mass = 0.5 - std::sin(2.0) / 4.0;  // int_0^1 sin^2
  CHECK(n.sine_norm.lower <= std::sqrt(sine_mass));
  CHECK(n.sine_norm.upper >= std::sqrt(sine_mass));
  CHECK(n.sine_norm.upper == doctest::Approx(std::sqrt(sine_mass)).epsilon(1e-9));

  const auto z = norms_for_box(0.0, 1.0, 2.0, 0.0, 2.0);
  CHECK(z.sine_norm.upper == 0.0);

  CHECK_THROWS_AS(norms_for_box(2.0, 1.0, 1.0, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(norms_for_box(0.0, 1.0, 1.0, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("box sine norm agrees with direct quadrature") {
  const double c = -1.0, d = 2.0, s = 1.7, p = 2.0;
  const auto n = norms_for_box(c, d, 1.0, s, p);
  const double mass = adaptive_simpson(
      [&](double x) { return std::pow(std::fabs(std::sin(s * x)), p); }, c, d, 1e-12);
  CHECK(n.sine_norm.lower <= std::pow(mass, 1.0 / p) * (1.0 + 1e-10));
  CHECK(n.sine_norm.upper >= std::pow(mass, 1.0 / p) * (1.0 - 1e-10));
}

TEST_CASE("certified bound dominates the true norm") {
  const auto norms = norms_for_box(0.0, 1.0, pi / 2.0, 1.0, 2.0);
  const auto cert = certify_bound(pi / 2.0, 1.0, 2.0, norms);
  CHECK(cert.p == 2.0);
  CHECK(cert.bound ==
        doctest::Approx(cert.decomposition.multiplier_bound *
                        (2.0 * norms.sine_norm.upper + norms.shift_norm.upper)));
  CHECK(cert.bound == doctest::Approx(6.424581).epsilon(1e-5));
  CHECK(cert.bound >= true_norm_box(0.0, 1.0, 2.0).upper);

  CHECK_THROWS_AS(certify_bound(pi / 2.0, 1.0, 0.5, norms), std::invalid_argument);
  CHECK_THROWS_AS(certify_bound(pi, 1.0, 2.0, norms), QuantizationError);
}

TEST_CASE("vector phases reduce to the scalar engine") {
  const auto norms = norms_for_box(0.0, 1.0, pi / 2.0, 1.0, 2.0);
  const auto flat = certify_bound(pi / 2.0, 1.0, 2.0, norms);
  const auto nd =
      certify_bound_nd({0.5, 1.0}, {1.0, pi / 2.0 - 0.5}, 2.0, norms);
  CHECK(nd.quantization.product == doctest::Approx(flat.quantization.product));
  CHECK(nd.bound == doctest::Approx(flat.bound));

  CHECK_THROWS_AS(certify_bound_nd({1.0}, {1.0, 2.0}, 2.0, norms),
                  std::invalid_argument);
  CHECK_THROWS_AS(certify_bound_nd({}, {}, 2.0, norms), std::invalid_argument);
  CHECK_THROWS_AS(certify_bound_nd({pi}, {1.0}, 2.0, norms), QuantizationError);
}

TEST_CASE("profile norms wrap the mass integrals") {
  const auto n = norms_for_power_profile(2.0, 0.7, 1.5, 2.0);
  const auto shift = profile_shift_mass(2.0, 0.7, 2.0);
  const auto sine = profile_sine_mass(2.0, 1.5, 2.0);
  CHECK(n.shift_norm.upper == doctest::Approx(std::sqrt(shift.upper)).epsilon(1e-12));
  CHECK(n.sine_norm.upper == doctest::Approx(std::sqrt(sine.upper)).epsilon(1e-12));

  const auto z = norms_for_zero();
  CHECK(z.shift_norm.upper == 0.0);
  CHECK(z.sine_norm.upper == 0.0);
}

TEST_CASE("reference norms") {
  CHECK(true_norm_box(0.0, 1.0, 5.0).upper == doctest::Approx(1.0));
  CHECK(true_norm_box(-1.0, 2.0, 3.0).upper == doctest::Approx(std::cbrt(3.0)));
  CHECK(true_norm_power_profile(2.0, 2.0).upper ==
        doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK_THROWS_AS(true_norm_power_profile(0.5, 2.0), std::domain_error);
  CHECK_THROWS_AS(true_norm_box(1.0, 0.0, 2.0), std::invalid_argument);
}
