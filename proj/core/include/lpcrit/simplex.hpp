#pragma once

namespace lpcrit {

// volume of { x in R^n : x_i >= 0, x_1 + ... + x_n <= a }, equals a^n/n!
double simplex_volume(int n, double a);

// integral of x_1^p over the same simplex, equals a^(n+p) * p! / (n+p)!
// (the factorial ratio is taken as Gamma(p+1)/Gamma(n+p+1) for fractional p)
double simplex_moment(int n, double a, double p);

}  // namespace lpcrit
