#include "lpcrit/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lpcrit {

namespace {

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
  if (b != 0 && a > std::numeric_limits<unsigned long long>::max() / b)
    throw std::overflow_error("lattice count does not fit in 64 bits");
  return a * b;
}

unsigned long long checked_add(unsigned long long a, unsigned long long b) {
  if (a > std::numeric_limits<unsigned long long>::max() - b)
    throw std::overflow_error("lattice count does not fit in 64 bits");
  return a + b;
}

// C(a, b), exact, throws on 64-bit overflow
unsigned long long binomial(unsigned long long a, unsigned long long b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  unsigned long long c = 1;
  for (unsigned long long i = 1; i <= b; ++i) {
    const unsigned long long num = a - b + i;
    // c/g * num is exactly divisible by i/g, so divide before multiplying
    const unsigned long long g = std::gcd(c, i);
    c = checked_mul(c / g, num / (i / g));
  }
  return c;
}

void validate(int n, long long k) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (k < 0) throw std::invalid_argument("layer index must be nonnegative");
}

}  // namespace

unsigned long long count_layer_nonneg(int n, long long k) {
  validate(n, k);
  return binomial(static_cast<unsigned long long>(k) + n - 1, n - 1);
}

unsigned long long count_layer_full(int n, long long k) {
  validate(n, k);
  if (k == 0) return 1;
  // choose the j coordinates that are nonzero, give each a sign, and split
  // k into j positive parts
  unsigned long long total = 0;
  unsigned long long pow2 = 1;
  for (int j = 1; j <= n; ++j) {
    pow2 = checked_mul(pow2, 2);
    if (j > k) break;
    const unsigned long long ways =
        checked_mul(binomial(n, j),
                    binomial(static_cast<unsigned long long>(k) - 1, j - 1));
    total = checked_add(total, checked_mul(pow2, ways));
  }
  return total;
}

unsigned long long count_ball(int n, long long k) {
  validate(n, k);
  // choose j coordinates to be nonzero with a sign each, then place |values|
  // summing to at most k: C(n,j) * 2^j * C(k,j) ways
  unsigned long long total = 1;  // the origin
  unsigned long long pow2 = 1;
  for (int j = 1; j <= n && j <= k; ++j) {
    pow2 = checked_mul(pow2, 2);
    const unsigned long long ways =
        checked_mul(binomial(n, j), binomial(static_cast<unsigned long long>(k), j));
    total = checked_add(total, checked_mul(pow2, ways));
  }
  return total;
}

namespace {

void enumerate(std::vector<long long>& x, int idx, long long remaining,
               const std::function<void(const std::vector<long long>&)>& visit) {
  const int n = static_cast<int>(x.size());
  if (idx == n - 1) {
    x[idx] = remaining;
    visit(x);
    if (remaining != 0) {
      x[idx] = -remaining;
      visit(x);
    }
    return;
  }
  for (long long v = -remaining; v <= remaining; ++v) {
    x[idx] = v;
    enumerate(x, idx + 1, remaining - std::llabs(v), visit);
  }
}

}  // namespace

void for_each_layer_point(int n, long long k,
                          const std::function<void(const std::vector<long long>&)>& visit) {
  validate(n, k);
  std::vector<long long> x(n, 0);
  enumerate(x, 0, k, visit);
}

Enclosure layer_count_envelope(int n, long long k) {
  validate(n, k);
  double factorial = 1.0;
  for (int i = 2; i < n; ++i) factorial *= i;
  const double kp1 = std::pow(static_cast<double>(k) + 1.0, n - 1);
  return make_enclosure(kp1 / factorial * (1.0 - 1e-15), kp1 * (1.0 + 1e-15),
                        Provenance::closed_form);
}

}  // namespace lpcrit
