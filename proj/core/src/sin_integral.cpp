#include "lpcrit/sin_integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpcrit {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_small_integer(double p, long long& out) {
  const double r = std::round(p);
  if (std::fabs(p - r) < 1e-12 && r >= 0.0 && r <= 60.0) {
    out = static_cast<long long>(r);
    return true;
  }
  return false;
}

// integral over [u, v] of min(1, t, pi - t)^p, 0 <= u <= v <= pi.
// Valid upper bound for the sine integral on the same range.
double cap_integral(double u, double v, double p) {
  auto power_part = [&](double a, double b) {
    // integral of t^p over [a, b] intersected with [0, 1]
    const double lo = std::clamp(a, 0.0, 1.0);
    const double hi = std::clamp(b, 0.0, 1.0);
    if (hi <= lo) return 0.0;
    return (std::pow(hi, p + 1.0) - std::pow(lo, p + 1.0)) / (p + 1.0);
  };
  double total = power_part(u, v);                      // rising edge near 0
  total += power_part(kPi - v, kPi - u);                // falling edge near pi
  const double flat_lo = std::max(u, 1.0);
  const double flat_hi = std::min(v, kPi - 1.0);
  if (flat_hi > flat_lo) total += flat_hi - flat_lo;    // plateau at 1
  return total;
}

// antiderivative recursion on [u, v] within [0, pi], p integer >= 0
double sin_power_closed(double u, double v, long long p) {
  if (p == 0) return v - u;
  const double su = std::sin(u), sv = std::sin(v);
  const double cu = std::cos(u), cv = std::cos(v);
  double even_acc = v - u;          // I_0
  double odd_acc = cu - cv;         // I_1
  double powu = 1.0, powv = 1.0;    // sin^(q-1) factors, built up as q grows
  double result = (p % 2 == 0) ? even_acc : odd_acc;
  for (long long q = 2; q <= p; ++q) {
    powu *= su;
    powv *= sv;
    const double edge = (cu * powu - cv * powv) / static_cast<double>(q);
    double& acc = (q % 2 == 0) ? even_acc : odd_acc;
    acc = edge + (static_cast<double>(q - 1) / static_cast<double>(q)) * acc;
    if (q == p) result = acc;
  }
  return result;
}

Enclosure piece_closed(double u, double v, long long p) {
  const double val = sin_power_closed(u, v, p);
  const double slack = static_cast<double>(p + 3) * 5e-16 * (1.0 + std::fabs(val));
  const double cap = cap_integral(u, v, static_cast<double>(p));
  const double lower = std::max(0.0, val - slack);
  const double upper = std::min(val + slack, cap);
  return make_enclosure(std::min(lower, upper), upper, Provenance::closed_form);
}

// Darboux endpoint sandwich on a monotone span of |sin|^p
void darboux_span(double a, double b, double p, long long cells, double& lo_sum,
                  double& hi_sum) {
  if (b <= a) return;
  cells = std::max<long long>(cells, 1);
  const double h = (b - a) / static_cast<double>(cells);
  double f_prev = std::pow(std::sin(a), p);
  for (long long i = 1; i <= cells; ++i) {
    const double x = (i == cells) ? b : a + h * static_cast<double>(i);
    const double f = std::pow(std::sin(x), p);
    lo_sum += std::min(f_prev, f) * h;
    hi_sum += std::max(f_prev, f) * h;
    f_prev = f;
  }
}

Enclosure piece_darboux(double u, double v, double p, long long cells) {
  double lo = 0.0, hi = 0.0;
  const double mid = kPi / 2.0;
  const double len = v - u;
  if (v <= mid || u >= mid) {
    darboux_span(u, v, p, cells, lo, hi);
  } else {
    const long long left = std::max<long long>(
        1, static_cast<long long>(static_cast<double>(cells) * (mid - u) / len));
    darboux_span(u, mid, p, left, lo, hi);
    darboux_span(mid, v, p, std::max<long long>(1, cells - left), lo, hi);
  }
  lo = std::max(0.0, lo * (1.0 - 1e-14));
  hi = std::min(hi * (1.0 + 1e-14), cap_integral(u, v, p));
  return make_enclosure(std::min(lo, hi), hi, Provenance::quadrature);
}

Enclosure integrate_reduced(double lo, double hi, double p, long long cells_budget) {
  long long pint = 0;
  const bool closed = cells_budget < 0 && is_small_integer(p, pint);

  const double j0 = std::floor(lo / kPi);
  const double j1 = std::floor(hi / kPi);
  struct Span {
    double u, v;
    double periods;  // multiplicity
  };
  Span spans[3];
  int nspans = 0;
  auto clampp = [](double t) { return std::clamp(t, 0.0, kPi); };
  if (j0 == j1) {
    spans[nspans++] = {clampp(lo - j0 * kPi), clampp(hi - j0 * kPi), 1.0};
  } else {
    spans[nspans++] = {clampp(lo - j0 * kPi), kPi, 1.0};
    const double full = j1 - j0 - 1.0;
    if (full > 0.0) spans[nspans++] = {0.0, kPi, full};
    const double tail_v = clampp(hi - j1 * kPi);
    if (tail_v > 0.0) spans[nspans++] = {0.0, tail_v, 1.0};
  }

  double total_len = 0.0;
  for (int i = 0; i < nspans; ++i) total_len += spans[i].v - spans[i].u;

  Enclosure acc = make_enclosure(0.0, 0.0, closed ? Provenance::closed_form
                                                  : Provenance::quadrature);
  for (int i = 0; i < nspans; ++i) {
    const Span& s = spans[i];
    if (s.v <= s.u) continue;
    Enclosure piece;
    if (closed) {
      piece = piece_closed(s.u, s.v, pint);
    } else {
      const long long budget = std::max<long long>(cells_budget, 16);
      const long long cells = std::max<long long>(
          8, static_cast<long long>(static_cast<double>(budget) * (s.v - s.u) /
                                    std::max(total_len, 1e-300)));
      piece = piece_darboux(s.u, s.v, p, cells);
    }
    acc = add(acc, scale(piece, s.periods));
  }
  return acc;
}

}  // namespace

double dist_to_pi_lattice(double x) { return std::fabs(std::remainder(x, kPi)); }

Enclosure sin_power_integral(double lo, double hi, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  if (!(lo <= hi)) throw std::invalid_argument("integration range is inverted");
  if (lo == hi) return make_enclosure(0.0, 0.0, Provenance::closed_form);
  long long pint = 0;
  const long long budget = is_small_integer(p, pint) ? -1 : 2000000;
  return integrate_reduced(lo, hi, p, budget);
}

Enclosure sin_power_integral_cells(double lo, double hi, double p, long long cells) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  if (!(lo <= hi)) throw std::invalid_argument("integration range is inverted");
  if (cells < 1) throw std::invalid_argument("cell budget must be positive");
  if (lo == hi) return make_enclosure(0.0, 0.0, Provenance::quadrature);
  return integrate_reduced(lo, hi, p, cells);
}

namespace {

double simpson_rule(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double sinp(double x, double p) { return std::pow(std::fabs(std::sin(x)), p); }

double adaptive(double p, double a, double b, double fa, double fm, double fb,
                double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = sinp(lm, p), frm = sinp(rm, p);
  const double left = simpson_rule(a, m, fa, flm, fm);
  const double right = simpson_rule(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive(p, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
         adaptive(p, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

}  // namespace

double sin_power_integral_estimate(double lo, double hi, double p, double tol) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  if (!(lo <= hi)) throw std::invalid_argument("integration range is inverted");
  if (lo == hi) return 0.0;
  const double fa = sinp(lo, p), fb = sinp(hi, p), fm = sinp(0.5 * (lo + hi), p);
  const double whole = simpson_rule(lo, hi, fa, fm, fb);
  return adaptive(p, lo, hi, fa, fm, fb, whole, tol, 48);
}

}  // namespace lpcrit
