#pragma once

#include <optional>
#include <string>

namespace lpcrit {

// scalar of the form (num/den) * pi^pi_power; symbolic means a literal "pi"
// token appeared, so the rational part is exact by construction and lattice
// membership can be decided without floating-point comparison
struct PiScalar {
  double num = 0.0;
  double den = 1.0;
  int pi_power = 0;
  bool symbolic = false;

  double value() const;
};

// accepts "2", "-1.5", "pi", "-pi", "3pi", "2*pi", "pi/2", "-3pi/4", "1/3"
PiScalar parse_pi_scalar(const std::string& token);

PiScalar operator*(const PiScalar& a, const PiScalar& b);

// symbolic verdict on product in pi*Z: true/false when decidable exactly
// (zero, or a pi token appeared), nullopt when only numerics can answer
std::optional<bool> in_pi_lattice(const PiScalar& product);

}  // namespace lpcrit
