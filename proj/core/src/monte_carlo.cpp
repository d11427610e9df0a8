#include "lpcrit/monte_carlo.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace lpcrit {

double Box::volume() const {
  if (lo.size() != hi.size()) throw std::invalid_argument("box corner size mismatch");
  double v = 1.0;
  for (size_t i = 0; i < lo.size(); ++i) {
    if (!(hi[i] >= lo[i])) throw std::invalid_argument("box has inverted side");
    v *= hi[i] - lo[i];
  }
  return v;
}

Enclosure monte_carlo_mass(const std::function<double(const std::vector<double>&)>& f,
                           const Box& box, long long samples, std::uint64_t seed) {
  if (samples < 1000) throw std::invalid_argument("need at least 1000 samples");
  const int d = box.dim();
  const double vol = box.volume();
  if (vol == 0.0) return make_enclosure(0.0, 0.0, Provenance::monte_carlo_estimate);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(d);

  double mean = 0.0, m2 = 0.0;
  for (long long i = 1; i <= samples; ++i) {
    for (int j = 0; j < d; ++j) x[j] = box.lo[j] + (box.hi[j] - box.lo[j]) * unit(rng);
    const double y = f(x);
    if (!std::isfinite(y)) throw std::domain_error("integrand not finite at sample point");
    const double delta = y - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (y - mean);
  }
  const double var = m2 / static_cast<double>(samples - 1);
  const double se = std::sqrt(var / static_cast<double>(samples));
  const double wing = 3.0 * se * vol;
  const double center = mean * vol;
  return make_enclosure(std::max(0.0, center - wing), center + wing,
                        Provenance::monte_carlo_estimate);
}

}  // namespace lpcrit
