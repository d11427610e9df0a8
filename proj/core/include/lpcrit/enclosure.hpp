#pragma once

#include <string>

namespace lpcrit {

// How an enclosure was obtained. Certificates may only be assembled from the
// first three; monte_carlo_estimate is a statistical band, not a proof.
enum class Provenance { closed_form, quadrature, series_tail, monte_carlo_estimate };

std::string to_string(Provenance p);

// Two-sided bound [lower, upper] for a nonnegative real quantity. Both ends
// finite; infinity is expressed by refusing to build the enclosure, never by
// storing an infinite float.
struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
  Provenance provenance = Provenance::closed_form;

  double width() const { return upper - lower; }
  double midpoint() const { return 0.5 * (lower + upper); }
  bool contains(double v) const { return lower <= v && v <= upper; }
};

// Validates lower <= upper and finiteness.
Enclosure make_enclosure(double lower, double upper, Provenance prov);

// Point enclosure widened by |v|-relative rounding slack.
Enclosure exact_value(double v, Provenance prov = Provenance::closed_form);

Enclosure add(const Enclosure& a, const Enclosure& b);
Enclosure scale(const Enclosure& a, double c);  // c >= 0
Enclosure mul(const Enclosure& a, const Enclosure& b);

// Enclosure of x^(1/p) given an enclosure of x, p >= 1.
Enclosure pth_root(const Enclosure& a, double p);

}  // namespace lpcrit
