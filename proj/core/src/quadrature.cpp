#include "lpcrit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpcrit {

namespace {

struct KahanAcc {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

constexpr long long kMinCellsPerBlock = 64;
constexpr long long kMaxCellsPerBlock = 4000000;

}  // namespace

Enclosure rigorous_blocked_integral(const std::function<double(double)>& f,
                                    const std::function<CellBounds(double, double)>& cell_info,
                                    const std::vector<double>& edges, double width_target) {
  if (edges.size() < 2) throw std::invalid_argument("need at least one block");
  if (!(width_target > 0.0)) throw std::invalid_argument("width target must be positive");
  const size_t nblocks = edges.size() - 1;
  const double per_block = width_target / static_cast<double>(nblocks);

  KahanAcc lo_acc, hi_acc;
  for (size_t b = 0; b < nblocks; ++b) {
    const double A = edges[b], B = edges[b + 1];
    if (!(B > A)) throw std::invalid_argument("block edges must increase");
    const double len = B - A;
    const CellBounds block_info = cell_info(A, B);
    // total Darboux width over the block is about L * h * len / 2
    long long cells = kMinCellsPerBlock;
    if (block_info.lipschitz > 0.0) {
      const double want = block_info.lipschitz * len * len / (2.0 * per_block);
      cells = std::clamp(static_cast<long long>(want) + 1, kMinCellsPerBlock,
                         kMaxCellsPerBlock);
    }
    const double h = len / static_cast<double>(cells);
    double f_prev = f(A);
    for (long long i = 1; i <= cells; ++i) {
      const double x = (i == cells) ? B : A + h * static_cast<double>(i);
      const double fx = f(x);
      const double u = x - h;
      const CellBounds ci = cell_info(u, x);
      const double mid = 0.5 * (f_prev + fx);
      const double half = 0.5 * ci.lipschitz * h;
      const double cell_hi = std::min(ci.cap, mid + half);
      const double cell_lo = std::max(0.0, std::min(mid - half, cell_hi));
      lo_acc.add(cell_lo * h);
      hi_acc.add(cell_hi * h);
      f_prev = fx;
    }
  }
  const double lo = std::max(0.0, lo_acc.sum * (1.0 - 1e-14));
  const double hi = hi_acc.sum * (1.0 + 1e-14);
  return make_enclosure(std::min(lo, hi), hi, Provenance::quadrature);
}

namespace {

// endpoint Darboux sums over a span where f is monotone
void darboux_monotone(const std::function<double(double)>& f, double a, double b,
                      long long cells, KahanAcc& lo, KahanAcc& hi) {
  if (!(b > a)) return;
  cells = std::max<long long>(cells, 1);
  const double h = (b - a) / static_cast<double>(cells);
  double f_prev = f(a);
  for (long long i = 1; i <= cells; ++i) {
    const double x = (i == cells) ? b : a + h * static_cast<double>(i);
    const double fx = f(x);
    lo.add(std::min(f_prev, fx) * h);
    hi.add(std::max(f_prev, fx) * h);
    f_prev = fx;
  }
}

double unit_sphere_area(int d) {
  // surface measure of S^(d-1)
  constexpr double pi = std::numbers::pi;
  switch (d) {
    case 1: return 2.0;
    case 2: return 2.0 * pi;
    case 3: return 4.0 * pi;
    case 4: return 2.0 * pi * pi;
    default:
      return 2.0 * std::pow(pi, 0.5 * d) / std::tgamma(0.5 * d);
  }
}

std::vector<double> doubling_edges(double first, double last) {
  std::vector<double> edges{0.0};
  for (double e = first; e < last; e *= 2.0) edges.push_back(e);
  edges.push_back(last);
  return edges;
}

}  // namespace

Enclosure radial_profile_mass(int d, double q) {
  if (d < 0) throw std::invalid_argument("dimension must be nonnegative");
  if (d == 0) return make_enclosure(1.0, 1.0, Provenance::closed_form);
  if (!(q > 0.5 * d)) throw std::domain_error("radial profile is not integrable: q <= d/2");

  const double area = unit_sphere_area(d);
  auto g = [d, q](double r) {
    return std::pow(r, d - 1) * std::pow(1.0 + r * r, -q);
  };
  // the Darboux defect is ~ variation * X / cells, the dropped tail is
  // X^(d-2q) / (2q-d); cut where the two error sources balance
  const double tail_exp = static_cast<double>(d) - 2.0 * q;  // < 0
  const long long cells = 300000;
  const double peak = d == 1 ? 0.0 : std::sqrt((d - 1) / (2.0 * q - d + 1.0));
  const double variation = d == 1 ? 1.0 : 2.0 * g(peak);
  double X = std::pow(static_cast<double>(cells) / variation,
                      1.0 / (2.0 * q - d + 1.0));
  X = std::clamp(X, 4.0, 1e7);
  const double tail = std::pow(X, tail_exp) / (2.0 * q - d);

  KahanAcc lo, hi;
  if (d == 1) {
    darboux_monotone(g, 0.0, X, cells, lo, hi);
  } else {
    const double split = std::min(peak, X);
    const long long left =
        std::max<long long>(1, static_cast<long long>(cells * split / X));
    darboux_monotone(g, 0.0, split, left, lo, hi);
    darboux_monotone(g, split, X, std::max<long long>(1, cells - left), lo, hi);
  }
  const double lower = std::max(0.0, area * lo.sum * (1.0 - 1e-13));
  const double upper = area * (hi.sum * (1.0 + 1e-13) + tail);
  return make_enclosure(std::min(lower, upper), upper, Provenance::quadrature);
}

Enclosure profile_sine_mass(double a, double s, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  if (!(a > 0.0)) throw std::invalid_argument("profile exponent must be positive");
  if (s == 0.0) return make_enclosure(0.0, 0.0, Provenance::closed_form);
  const double ap = a * p;
  if (!(ap > 1.0)) throw std::domain_error("profile tail not integrable: a*p <= 1");

  const double sa = std::fabs(s);
  const double tol = 1e-3;
  double X = std::pow(2.0 / ((ap - 1.0) * 0.25 * tol), 1.0 / (ap - 1.0)) - 1.0;
  X = std::clamp(X, 4.0, 1e6);
  const double tail = 2.0 * std::pow(1.0 + X, 1.0 - ap) / (ap - 1.0);

  auto f = [sa, ap, p](double x) {
    return std::pow(std::fabs(std::sin(sa * x)), p) * std::pow(1.0 + x, -ap);
  };
  auto info = [sa, ap, a, p](double u, double) {
    const double w = std::pow(1.0 + u, -ap);
    return CellBounds{w, w * (p * sa + a * p)};
  };
  const Enclosure half =
      rigorous_blocked_integral(f, info, doubling_edges(1.0, X), 0.25 * tol);
  // integrand is even in x
  return make_enclosure(2.0 * half.lower, 2.0 * half.upper + tail,
                        Provenance::quadrature);
}

Enclosure profile_shift_mass(double a, double t, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  if (!(a > 0.0)) throw std::invalid_argument("profile exponent must be positive");
  if (t == 0.0) return make_enclosure(0.0, 0.0, Provenance::closed_form);
  const double a1p = (a + 1.0) * p;
  if (!(a1p > 1.0)) throw std::domain_error("shift tail not integrable: (a+1)*p <= 1");

  const double ta = std::fabs(t);
  auto g = [a](double x) { return std::pow(1.0 + std::fabs(x), -a); };
  auto f = [&](double x) { return std::pow(std::fabs(g(x + t) - g(x)), p); };
  // m(x) = 1 + max(0, |x| - |t|) lower-bounds 1 + |u| on the segment [x, x+t]
  auto seg = [ta](double xa) { return 1.0 + std::max(0.0, xa - ta); };
  auto info = [&](double u, double v) {
    const double nearest = (u <= 0.0 && v >= 0.0) ? 0.0 : std::min(std::fabs(u), std::fabs(v));
    const double m = seg(nearest);
    const double dcap = std::min(1.0, a * ta * std::pow(m, -a - 1.0));
    const double lip = 2.0 * a * p * std::pow(dcap, p - 1.0) * std::pow(m, -a - 1.0);
    return CellBounds{std::pow(dcap, p), lip};
  };

  const double tol = 1e-3;
  double X = std::pow(2.0 * std::pow(a * ta, p) / ((a1p - 1.0) * 0.25 * tol),
                      1.0 / (a1p - 1.0)) + ta;
  X = std::clamp(X, 2.0 * (1.0 + ta), 1e6);
  const double tail = 2.0 * std::pow(a * ta, p) *
                      std::pow(1.0 + X - ta, 1.0 - a1p) / (a1p - 1.0);

  std::vector<double> right = doubling_edges(1.0, X);
  std::vector<double> edges(right.rbegin(), right.rend());
  for (double& e : edges) e = -e;
  edges.insert(edges.end(), right.begin() + 1, right.end());
  const Enclosure body = rigorous_blocked_integral(f, info, edges, 0.5 * tol);
  return make_enclosure(body.lower, body.upper + tail, Provenance::quadrature);
}

Enclosure recip_sine_mass(double s, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  if (s == 0.0) return make_enclosure(0.0, 0.0, Provenance::closed_form);
  const double sa = std::fabs(s);
  const double cap_all = std::pow(sa, p);  // |sin(s x)| <= |s| x

  const double head = std::pow(2.0, -24);
  const double head_lo =
      cap_all * head * std::pow(std::max(0.0, 1.0 - sa * sa * head * head / 6.0), p);
  const double head_hi = cap_all * head;

  auto f = [sa, p](double x) {
    return std::pow(std::fabs(std::sin(sa * x)) / x, p);
  };
  auto info = [sa, p, cap_all](double u, double) {
    const double amp = std::min(sa, 1.0 / u);
    return CellBounds{std::min(cap_all, std::pow(amp, p)),
                      p * std::pow(amp, p - 1.0) * 2.0 * sa / u};
  };
  const Enclosure body =
      rigorous_blocked_integral(f, info, doubling_edges(head, 1.0), 1e-4 * cap_all);
  return make_enclosure(body.lower + head_lo, body.upper + head_hi,
                        Provenance::quadrature);
}

namespace {

double simpson_rule(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_rule(a, m, fa, flm, fm);
  const double right = simpson_rule(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  if (!(a <= b)) throw std::invalid_argument("integration range is inverted");
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_rec(f, a, b, fa, fm, fb, simpson_rule(a, b, fa, fm, fb), tol, 48);
}

}  // namespace lpcrit
