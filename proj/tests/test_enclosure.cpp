#include <doctest.h>

#include <stdexcept>

#include "lpcrit/enclosure.hpp"

using namespace lpcrit;

TEST_CASE("make_enclosure validates ordering") {
  const Enclosure e = make_enclosure(1.0, 2.0, Provenance::quadrature);
  CHECK(e.lower == 1.0);
  CHECK(e.upper == 2.0);
  CHECK(e.width() == 1.0);
  CHECK(e.midpoint() == 1.5);
  CHECK(e.contains(1.0));
  CHECK(e.contains(2.0));
  CHECK(!e.contains(2.0000001));
  CHECK_THROWS_AS(make_enclosure(2.0, 1.0, Provenance::quadrature), std::invalid_argument);
}

TEST_CASE("exact_value carries rounding slack both ways") {
  const Enclosure e = exact_value(10.0);
  CHECK(e.lower <= 10.0);
  CHECK(e.upper >= 10.0);
  CHECK(e.width() <= 10.0 * 1e-15);
  const Enclosure z = exact_value(0.0);
  CHECK(z.lower == 0.0);
  CHECK(z.upper == 0.0);
}

TEST_CASE("add is interval addition") {
  const Enclosure a = make_enclosure(1.0, 2.0, Provenance::closed_form);
  const Enclosure b = make_enclosure(10.0, 11.0, Provenance::quadrature);
  const Enclosure c = add(a, b);
  CHECK(c.lower <= 11.0);
  CHECK(c.upper >= 13.0);
  // mixed provenances merge to the generic series_tail tag
  CHECK(c.provenance == Provenance::series_tail);
  CHECK(add(a, a).provenance == Provenance::closed_form);
}

TEST_CASE("scale rejects negative factors and scales both ends") {
  const Enclosure a = make_enclosure(1.0, 2.0, Provenance::closed_form);
  const Enclosure s = scale(a, 3.0);
  CHECK(s.lower <= 3.0);
  CHECK(s.upper >= 6.0);
  CHECK_THROWS_AS(scale(a, -1.0), std::invalid_argument);
}

TEST_CASE("mul multiplies nonnegative intervals outward") {
  const Enclosure a = make_enclosure(2.0, 3.0, Provenance::closed_form);
  const Enclosure b = make_enclosure(5.0, 7.0, Provenance::series_tail);
  const Enclosure c = mul(a, b);
  CHECK(c.lower <= 10.0);
  CHECK(c.lower >= 10.0 * (1 - 1e-14));
  CHECK(c.upper >= 21.0);
  CHECK(c.upper <= 21.0 * (1 + 1e-14));
  const Enclosure neg = make_enclosure(-1.0, 1.0, Provenance::closed_form);
  CHECK_THROWS_AS(mul(neg, b), std::invalid_argument);
}

TEST_CASE("pth_root encloses the exact root") {
  const Enclosure a = make_enclosure(8.0, 8.0, Provenance::closed_form);
  const Enclosure r = pth_root(a, 3.0);
  CHECK(r.contains(2.0));
  CHECK(r.width() < 1e-14);
  // interval of width zero at 0 stays at 0
  const Enclosure z = pth_root(make_enclosure(0.0, 0.0, Provenance::closed_form), 2.0);
  CHECK(z.lower == 0.0);
  CHECK(z.upper == 0.0);
}
