#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lpcrit/enclosure.hpp"
#include "lpcrit/function_model.hpp"

namespace lpcrit {

// where t*s sits relative to the lattice pi*Z
struct QuantizationReport {
  double product = 0.0;      // t*s
  long long nearest = 0;     // closest integer multiple of pi
  double distance = 0.0;     // |product - nearest*pi|
  double threshold = 0.0;
  bool violated = false;     // distance < threshold: no bound exists
};

QuantizationReport check_quantization(double t, double s, double threshold = 1e-9);

struct QuantizationError : std::domain_error {
  explicit QuantizationError(const QuantizationReport& r);
  QuantizationReport report;
};

// numerical witness that the phase set E = union [k*pi - delta, k*pi + delta]
// lands in its own complement after translation by the product
struct ShiftSetCheck {
  int points = 0;
  double min_distance = 0.0;  // smallest lattice distance of a translated point
  double delta = 0.0;
  bool separated = false;
};

struct Decomposition {
  double product = 0.0;
  long long whole = 0;       // floor(product / pi)
  double tau = 0.0;          // product - whole*pi, in (0, pi)
  double delta = 0.0;
  double multiplier_bound = 0.0;  // 1/sin(delta)
  ShiftSetCheck check;
};

// picks delta (default dist(product, pi*Z)/4, or validates the given one
// against 2*delta <= tau <= pi - 2*delta) and runs the translation check;
// throws QuantizationError when the product sits on the lattice
Decomposition build_decomposition(double t, double s,
                                  std::optional<double> delta = std::nullopt,
                                  double threshold = 1e-9);

// upper bounds on ||shift difference of f||_p and ||sin(s.)f||_p
struct NormPair {
  Enclosure shift_norm;
  Enclosure sine_norm;
};

struct BoundCertificate {
  QuantizationReport quantization;
  Decomposition decomposition;
  NormPair norms;
  double p = 0.0;
  double bound = 0.0;  // ||f||_p <= multiplier_bound*(2*sine + shift)
};

BoundCertificate certify_bound(double t, double s, double p, const NormPair& norms,
                               std::optional<double> delta = std::nullopt,
                               double threshold = 1e-9);

// same arithmetic driven by the scalar phase product <a, b>; the separating
// set becomes the slab where |sin of the phase| is small
BoundCertificate certify_bound_nd(const std::vector<double>& a,
                                  const std::vector<double>& b, double p,
                                  const NormPair& norms,
                                  std::optional<double> delta = std::nullopt,
                                  double threshold = 1e-9);

// engine inputs for the concrete 1D models
NormPair norms_for_box(double c, double d, double t, double s, double p);
NormPair norms_for_power_profile(double a, double t, double s, double p);
NormPair norms_for_zero();

// exact p-norms used to judge the certified bounds from outside
Enclosure true_norm_box(double c, double d, double p);
Enclosure true_norm_power_profile(double a, double p);  // needs a*p > 1

}  // namespace lpcrit
