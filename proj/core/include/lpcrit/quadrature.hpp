#pragma once

#include <functional>
#include <vector>

#include "lpcrit/enclosure.hpp"

namespace lpcrit {

// Analytic facts valid on one whole cell: a pointwise upper bound and a
// Lipschitz constant for the integrand there.
struct CellBounds {
  double cap = 0.0;
  double lipschitz = 0.0;
};

// Rigorous enclosure of integral of f >= 0 over consecutive blocks
// [edges[0], edges[1]], [edges[1], edges[2]], ... Each block is cut into
// uniform cells sized from its own Lipschitz bound so the total width stays
// near width_target. cell_info(u, v) must be valid on all of [u, v].
Enclosure rigorous_blocked_integral(const std::function<double(double)>& f,
                                    const std::function<CellBounds(double, double)>& cell_info,
                                    const std::vector<double>& edges, double width_target);

// Enclosure of integral over R^d of (1 + |x|^2)^(-q) dx, q > d/2; d = 0 gives [1, 1].
Enclosure radial_profile_mass(int d, double q);

// integral over R of |sin(s x)|^p (1 + |x|)^(-a p) dx; requires a p > 1 for the tail.
Enclosure profile_sine_mass(double a, double s, double p);

// integral over R of |g(x + t) - g(x)|^p dx, g(x) = (1 + |x|)^(-a);
// requires (a + 1) p > 1 for the tail.
Enclosure profile_shift_mass(double a, double t, double p);

// integral over (0, 1) of (|sin(s x)| / x)^p dx; finite for every s (capped by |s|^p).
Enclosure recip_sine_mass(double s, double p);

// Generic non-rigorous adaptive Simpson estimate.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10);

}  // namespace lpcrit
