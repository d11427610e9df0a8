#pragma once

#include "lpcrit/enclosure.hpp"

namespace lpcrit {

// Distance from x to the nearest integer multiple of pi.
double dist_to_pi_lattice(double x);

// Rigorous enclosure of integral_{lo}^{hi} |sin t|^p dt for p >= 1.
// Integer p uses the antiderivative recursion; other p a monotone Darboux
// sandwich. Upper ends are clamped by the pointwise cap
// |sin t| <= min(1, dist(t, pi Z)), so on [k pi, k pi + a] with a <= 1 the
// upper never exceeds a^(p+1)/(p+1). Periods are aggregated in closed form,
// so huge ranges cost the same as one period.
Enclosure sin_power_integral(double lo, double hi, double p);

// Same quantity with an explicit Darboux cell budget regardless of p.
// Refining the budget shrinks the enclosure monotonically.
Enclosure sin_power_integral_cells(double lo, double hi, double p, long long cells);

// Fast non-rigorous estimate (adaptive Simpson). Never feeds certificates.
double sin_power_integral_estimate(double lo, double hi, double p, double tol = 1e-10);

}  // namespace lpcrit
