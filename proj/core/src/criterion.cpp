#include "lpcrit/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lpcrit/quadrature.hpp"
#include "lpcrit/sin_integral.hpp"

namespace lpcrit {

namespace {
constexpr double kPi = std::numbers::pi;
}

QuantizationReport check_quantization(double t, double s, double threshold) {
  if (!std::isfinite(t) || !std::isfinite(s))
    throw std::invalid_argument("shift and frequency must be finite");
  if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
  QuantizationReport r;
  r.product = t * s;
  r.nearest = static_cast<long long>(std::llround(r.product / kPi));
  r.distance = dist_to_pi_lattice(r.product);
  r.threshold = threshold;
  r.violated = r.distance < threshold;
  return r;
}

namespace {

std::string quantization_message(const QuantizationReport& r) {
  std::ostringstream os;
  os << "product " << r.product << " is within " << r.distance
     << " of lattice point " << r.nearest << "*pi: no finite bound exists there";
  return os.str();
}

}  // namespace

QuantizationError::QuantizationError(const QuantizationReport& r)
    : std::domain_error(quantization_message(r)), report(r) {}

namespace {

ShiftSetCheck run_translation_check(double product, double delta) {
  constexpr int kSites = 5;
  constexpr int kOffsets = 25;
  ShiftSetCheck c;
  c.delta = delta;
  c.min_distance = std::numeric_limits<double>::infinity();
  for (int k = -kSites / 2; k <= kSites / 2; ++k) {
    for (int i = 0; i < kOffsets; ++i) {
      const double u = -delta + 2.0 * delta * static_cast<double>(i) / (kOffsets - 1);
      const double x = static_cast<double>(k) * kPi + u;
      c.min_distance = std::min(c.min_distance, dist_to_pi_lattice(x + product));
      ++c.points;
    }
  }
  c.separated = c.min_distance >= delta * (1.0 - 1e-9);
  return c;
}

}  // namespace

Decomposition build_decomposition(double t, double s, std::optional<double> delta,
                                  double threshold) {
  const QuantizationReport q = check_quantization(t, s, threshold);
  if (q.violated) throw QuantizationError(q);

  Decomposition d;
  d.product = q.product;
  d.whole = static_cast<long long>(std::floor(d.product / kPi));
  d.tau = d.product - static_cast<double>(d.whole) * kPi;
  if (!(d.tau > 0.0 && d.tau < kPi)) {
    // floor rounding put the remainder on an endpoint; the quantization gate
    // already guarantees we are at distance >= threshold from the lattice
    d.tau = std::clamp(d.tau, q.distance, kPi - q.distance);
  }

  if (delta) {
    if (!(*delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (!(2.0 * *delta <= d.tau && d.tau <= kPi - 2.0 * *delta)) {
      std::ostringstream os;
      os << "delta " << *delta << " too wide for remainder " << d.tau
         << ": need 2*delta <= tau <= pi - 2*delta";
      throw std::invalid_argument(os.str());
    }
    d.delta = *delta;
  } else {
    d.delta = std::min(d.tau, kPi - d.tau) / 4.0;
  }
  d.multiplier_bound = 1.0 / std::sin(d.delta);
  d.check = run_translation_check(d.product, d.delta);
  if (!d.check.separated)
    throw std::logic_error("translated phase set failed to clear the lattice");
  return d;
}

BoundCertificate certify_bound(double t, double s, double p, const NormPair& norms,
                               std::optional<double> delta, double threshold) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  BoundCertificate cert;
  cert.quantization = check_quantization(t, s, threshold);
  if (cert.quantization.violated) throw QuantizationError(cert.quantization);
  cert.decomposition = build_decomposition(t, s, delta, threshold);
  cert.norms = norms;
  cert.p = p;
  cert.bound = cert.decomposition.multiplier_bound *
               (2.0 * norms.sine_norm.upper + norms.shift_norm.upper);
  return cert;
}

BoundCertificate certify_bound_nd(const std::vector<double>& a,
                                  const std::vector<double>& b, double p,
                                  const NormPair& norms,
                                  std::optional<double> delta, double threshold) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("shift and frequency vectors must match");
  double product = 0.0;
  for (size_t i = 0; i < a.size(); ++i) product += a[i] * b[i];
  // the scalar engine only sees the phase product
  return certify_bound(product, 1.0, p, norms, delta, threshold);
}

NormPair norms_for_box(double c, double d, double t, double s, double p) {
  if (!(c <= d)) throw std::invalid_argument("box support is inverted");
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  NormPair n;
  // the difference of shifted indicators is a sign pattern on the symmetric
  // difference, whose length is exactly 2*min(|t|, d - c)
  const double sym = 2.0 * std::min(std::fabs(t), d - c);
  n.shift_norm = pth_root(exact_value(sym), p);
  if (s == 0.0) {
    n.sine_norm = make_enclosure(0.0, 0.0, Provenance::closed_form);
  } else {
    const double lo = std::min(s * c, s * d), hi = std::max(s * c, s * d);
    Enclosure mass = scale(sin_power_integral(lo, hi, p), 1.0 / std::fabs(s));
    n.sine_norm = pth_root(mass, p);
  }
  return n;
}

NormPair norms_for_power_profile(double a, double t, double s, double p) {
  NormPair n;
  n.shift_norm = pth_root(profile_shift_mass(a, t, p), p);
  n.sine_norm = pth_root(profile_sine_mass(a, s, p), p);
  return n;
}

NormPair norms_for_zero() {
  NormPair n;
  n.shift_norm = make_enclosure(0.0, 0.0, Provenance::closed_form);
  n.sine_norm = make_enclosure(0.0, 0.0, Provenance::closed_form);
  return n;
}

Enclosure true_norm_box(double c, double d, double p) {
  if (!(c <= d)) throw std::invalid_argument("box support is inverted");
  return pth_root(exact_value(d - c), p);
}

Enclosure true_norm_power_profile(double a, double p) {
  if (!(a * p > 1.0)) throw std::domain_error("profile is not p-integrable: a*p <= 1");
  return pth_root(exact_value(2.0 / (a * p - 1.0)), p);
}

}  // namespace lpcrit
