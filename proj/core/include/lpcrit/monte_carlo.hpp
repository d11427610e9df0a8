#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lpcrit/enclosure.hpp"

namespace lpcrit {

// axis-aligned box, lo[i] <= hi[i]
struct Box {
  std::vector<double> lo, hi;
  int dim() const { return static_cast<int>(lo.size()); }
  double volume() const;
};

// plain Monte Carlo estimate of the integral of f >= 0 over the box.
// Returns mean +- 3 standard errors (lower clamped at 0) so it can be
// compared against rigorous enclosures.  Estimate only, never a proof.
Enclosure monte_carlo_mass(const std::function<double(const std::vector<double>&)>& f,
                           const Box& box, long long samples, std::uint64_t seed);

}  // namespace lpcrit
