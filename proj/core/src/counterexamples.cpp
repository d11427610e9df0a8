#include "lpcrit/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lpcrit/lattice.hpp"
#include "lpcrit/quadrature.hpp"
#include "lpcrit/simplex.hpp"
#include "lpcrit/sin_integral.hpp"

namespace lpcrit {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_small_integer(double p) { return p == std::floor(p) && p <= 60.0; }

// integral of sin(u)^p over [0, a] for a in [0, 1]; for tiny a the
// antiderivative cancels catastrophically, so switch to the Taylor sandwich
// u^p (1 - p u^2/6) <= sin(u)^p <= u^p
Enclosure sine_bump_mass(double a, double p) {
  if (a == 0.0) return make_enclosure(0.0, 0.0, Provenance::closed_form);
  const double tiny = std::pow(6.4e-14 * (p + 3.0), 1.0 / (p + 1.0));
  if (a <= tiny) {
    const double top = std::pow(a, p + 1.0);
    const double hi = top / (p + 1.0);
    const double lo = std::max(0.0, hi - top * a * a * p / (6.0 * (p + 3.0)));
    return make_enclosure(std::min(lo, hi) * (1.0 - 4e-16), hi * (1.0 + 4e-16),
                          Provenance::closed_form);
  }
  if (is_small_integer(p)) return sin_power_integral(0.0, a, p);
  return sin_power_integral_cells(0.0, a, p, 256);
}

double validate_exponent(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  return p;
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// largest layer index whose exact count still fits comfortably in 64 bits
long long safe_layer_cap(int n) {
  if (n <= 1) return 1LL << 60;
  const double bits = (62.0 - n) / (n - 1.0);
  if (bits >= 60.0) return 1LL << 60;
  return static_cast<long long>(std::exp2(bits)) - 1;
}

Enclosure zero_mass() { return make_enclosure(0.0, 0.0, Provenance::closed_form); }

}  // namespace

IntervalCounterexample make_interval_family(double p) {
  validate_exponent(p);
  return IntervalCounterexample{IntervalFamily1D::harmonic_pi(), p};
}

double IntervalCounterexample::shift_mass_exact() const {
  // sizes telescope on each side of the origin under the pi-shift
  return 2.0 * family.a0;
}

SeriesSpec IntervalCounterexample::sine_series() const {
  SeriesSpec s;
  s.term = [fam = family, pp = p](long long k) {
    const double m = sine_bump_mass(fam.size(k), pp).upper;
    return k == 0 ? m : 2.0 * m;
  };
  // per term: 2 * a_k^(p+1) * (1/(p+1) + darboux/rounding headroom)
  s.upper_envelope =
      PowerEnvelope{2.0 * std::pow(family.coeff, p + 1.0) * (1.0 / (p + 1.0) + 1.0 / 64.0),
                    -(p + 1.0), 0.0, 1};
  s.label = "interval-family sine mass";
  return s;
}

SeriesSpec IntervalCounterexample::mass_series() const {
  SeriesSpec s;
  s.term = [fam = family](long long k) {
    return k == 0 ? fam.size(0) : 2.0 * fam.size(k);
  };
  const double c = 2.0 * family.coeff;
  s.partial_lower =
      PartialLowerBound{[c](long long K) {
                          return K < 1 ? 0.0 : c * std::log(static_cast<double>(K));
                        },
                        "harmonic-log"};
  s.label = "interval-family p-mass";
  return s;
}

CounterexampleReport verify_interval_family(double p, double target, long long layers,
                                            unsigned threads) {
  const IntervalCounterexample c = make_interval_family(p);
  CounterexampleReport r;
  r.kind = "interval-family";
  r.p = p;
  r.t = kPi;
  r.s = 1.0;
  r.target = target;
  r.shift_mass = exact_value(c.shift_mass_exact());
  r.sine_mass = sum_with_tail(c.sine_series(), layers, threads);
  r.mass = certify_divergence(c.mass_series(), target, threads);
  return r;
}

CounterexampleReport verify_vanishing_shift(double s, double p, double target,
                                            unsigned threads) {
  validate_exponent(p);
  if (!std::isfinite(s)) throw std::invalid_argument("frequency must be finite");
  CounterexampleReport r;
  r.kind = "vanishing-shift";
  r.p = p;
  r.t = 0.0;
  r.s = s;
  r.target = target;
  r.shift_mass = zero_mass();
  r.sine_mass = s == 0.0 ? zero_mass() : recip_sine_mass(s, p);

  SeriesSpec mass;
  mass.term = [p](long long k) {
    // integral of x^(-p) over the dyadic shell [2^(-k-1), 2^(-k)]
    if (p == 1.0) return std::numbers::ln2;
    const double e = p - 1.0;
    return (std::exp2(e * static_cast<double>(k + 1)) -
            std::exp2(e * static_cast<double>(k))) /
           e;
  };
  // every shell holds at least length * min height = 2^(k(p-1))/2 >= 1/2
  mass.partial_lower = PartialLowerBound{
      [](long long K) { return 0.5 * static_cast<double>(K); }, "dyadic-shell"};
  mass.label = "reciprocal p-mass near zero";
  r.mass = certify_divergence(mass, target, threads);
  return r;
}

double default_profile_exponent(double p) {
  validate_exponent(p);
  // midpoint of the divergence window (1/p - 1, 1/p]
  return (std::max(0.0, 1.0 / p - 1.0) + 1.0 / p) / 2.0;
}

CounterexampleReport verify_vanishing_frequency(double t, double p, double target,
                                                std::optional<double> a_opt,
                                                unsigned threads) {
  validate_exponent(p);
  if (!std::isfinite(t)) throw std::invalid_argument("shift must be finite");
  const double a = a_opt.value_or(default_profile_exponent(p));
  if (!(a > 0.0)) throw std::invalid_argument("profile exponent must be positive");
  if (!(a * p <= 1.0))
    throw std::invalid_argument("profile with a*p > 1 is p-integrable: not a counterexample");
  if (!((a + 1.0) * p > 1.0))
    throw std::invalid_argument("shift difference needs (a+1)*p > 1 to be p-summable");

  CounterexampleReport r;
  r.kind = "vanishing-frequency";
  r.p = p;
  r.t = t;
  r.s = 0.0;
  r.target = target;
  r.shift_mass = t == 0.0 ? zero_mass() : profile_shift_mass(a, t, p);
  r.sine_mass = zero_mass();

  const double ap = a * p;
  SeriesSpec mass;
  mass.term = [ap](long long k) {
    // 2 * integral of (1+|x|)^(-ap) over [k, k+1], exact
    const double u = 1.0 + static_cast<double>(k), v = 2.0 + static_cast<double>(k);
    if (ap == 1.0) return 2.0 * std::log(v / u);
    return 2.0 * (std::pow(v, 1.0 - ap) - std::pow(u, 1.0 - ap)) / (1.0 - ap);
  };
  mass.partial_lower = PartialLowerBound{
      [ap](long long K) {
        const double v = 1.0 + static_cast<double>(K);
        if (ap == 1.0) return 2.0 * std::log(v);
        return 2.0 * (std::pow(v, 1.0 - ap) - 1.0) / (1.0 - ap);
      },
      ap == 1.0 ? "log-tail-integral" : "power-tail-integral"};
  mass.label = "slow-profile p-mass";
  r.mass = certify_divergence(mass, target, threads);
  return r;
}

LatticeCounterexample make_lattice_nd(int n, double gamma, double p) {
  if (n < 1 || n > 8) throw std::invalid_argument("dimension must be in [1, 8]");
  validate_exponent(p);
  const double floor_gamma = (n - 1.0) / n;
  if (!(gamma > floor_gamma && gamma <= 1.0)) {
    std::ostringstream os;
    os << "decay " << gamma << " outside (" << floor_gamma
       << ", 1]: either the mass converges or the shift differences blow up";
    throw std::invalid_argument(os.str());
  }
  LatticeCounterexample c;
  c.n = n;
  c.gamma = gamma;
  c.p = p;
  c.family = SimplexFamily{n, std::vector<double>(n, kPi), 1.0, gamma};
  c.family.validate();
  return c;
}

double LatticeCounterexample::mass_exponent() const { return n - 1 - gamma * n; }
double LatticeCounterexample::sine_exponent() const { return n - 1 - gamma * (n + p); }
double LatticeCounterexample::shift_exponent() const { return n - 2 - gamma * n; }

SeriesSpec LatticeCounterexample::mass_series() const {
  SeriesSpec s;
  const double nf = factorial_d(n);
  s.term = [nn = n, gn = gamma * n, nf](long long k) {
    return static_cast<double>(count_layer_full(nn, k)) *
           std::pow(1.0 + static_cast<double>(k), -gn) / nf;
  };
  // layer count >= (k+1)^(n-1)/(n-1)!, so terms dominate c (1+k)^(-beta)
  const double c = 1.0 / (factorial_d(n - 1) * nf);
  const double beta = gamma * n - (n - 1);
  s.partial_lower = PartialLowerBound{
      [c, beta](long long K) {
        const double v = 1.0 + static_cast<double>(K);
        if (beta >= 1.0) return c * std::log(v);
        return c * (std::pow(v, 1.0 - beta) - 1.0) / (1.0 - beta);
      },
      "layer-integral"};
  s.label = "lattice-family p-mass";
  s.direct_cap = safe_layer_cap(n);
  return s;
}

SeriesSpec LatticeCounterexample::sine_series() const {
  SeriesSpec s;
  const double mom = simplex_moment(n, 1.0, p);
  s.term = [nn = n, e = gamma * (n + p), mom](long long k) {
    return static_cast<double>(count_layer_full(nn, k)) * mom *
           std::pow(1.0 + static_cast<double>(k), -e);
  };
  s.upper_envelope = PowerEnvelope{std::exp2(n) * mom, sine_exponent(), 1.0, 0};
  s.label = "lattice-family sine mass";
  s.direct_cap = safe_layer_cap(n);
  return s;
}

SeriesSpec LatticeCounterexample::shift_series() const {
  SeriesSpec s;
  const double nf = factorial_d(n);
  const double gn = gamma * n;
  auto R = [gn](long long j) {
    return std::pow(1.0 + static_cast<double>(j), -gn);
  };
  s.term = [nn = n, nf, R](long long k) {
    if (k == 0) return (R(0) - R(1)) / nf;
    // sites whose first coordinate is >= 0 move one layer out, the rest
    // move one layer in; bumps stay nested, so differences are exact
    const double outward =
        nn == 1 ? 1.0 : static_cast<double>(count_ball(nn - 1, k));
    const double total = static_cast<double>(count_layer_full(nn, k));
    return (outward * (R(k) - R(k + 1)) + (total - outward) * (R(k - 1) - R(k))) / nf;
  };
  // counts <= 2^n (k+1)^(n-1); one-step differences <= gn k^(-gn-1), and
  // k^(-gn-1) <= 2^(gn+1) (k+1)^(-gn-1) once k >= 1
  s.upper_envelope = PowerEnvelope{std::exp2(n) * gn * std::exp2(gn + 1.0) / nf,
                                   shift_exponent(), 1.0, 1};
  s.label = "lattice-family shift mass";
  s.direct_cap = safe_layer_cap(n);
  return s;
}

CounterexampleReport verify_lattice_nd(const LatticeCounterexample& c, double target,
                                       long long layers, unsigned threads) {
  CounterexampleReport r;
  r.kind = "lattice-family";
  r.p = c.p;
  r.a.assign(c.n, 0.0);
  r.a[0] = kPi;
  r.b.assign(c.n, 0.0);
  r.b[0] = 1.0;
  r.target = target;
  r.shift_mass = sum_with_tail(c.shift_series(), layers, threads);
  const Enclosure raw = sum_with_tail(c.sine_series(), layers, threads);
  // the moment terms cap each bump above; sin(1)^p caps it below on [0,1]
  r.sine_mass = make_enclosure(std::pow(std::sin(1.0), c.p) * raw.lower, raw.upper,
                               Provenance::series_tail);
  r.mass = certify_divergence(c.mass_series(), target, threads);
  return r;
}

SingletonCounterexample make_singleton_nd(const std::vector<double>& a,
                                          const std::vector<double>& b, double p) {
  if (a.size() != b.size())
    throw std::invalid_argument("shift and frequency vectors must have equal size");
  const int n = static_cast<int>(a.size());
  if (n < 2)
    throw std::invalid_argument("below dimension 2 use the interval generator");
  validate_exponent(p);

  int axis = -1;
  for (int i = 0; i < n; ++i) {
    if (b[i] == 0.0) continue;
    if (axis >= 0)
      throw std::invalid_argument("frequency vector must hit a single axis");
    if (std::fabs(std::fabs(b[i]) - 1.0) > 1e-12)
      throw std::invalid_argument("frequency entry must be +1 or -1");
    axis = i;
  }
  if (axis < 0) throw std::invalid_argument("frequency vector must be nonzero");
  if (std::fabs(std::fabs(a[axis]) - kPi) > 1e-9)
    throw std::invalid_argument(
        "axis shift must be +-pi; other pairs do not violate quantization here");

  int oblique = -1;
  for (int i = 0; i < n; ++i) {
    if (i == axis || a[i] == 0.0) continue;
    if (oblique >= 0)
      throw std::invalid_argument("at most one oblique shift component is supported");
    oblique = i;
  }

  SingletonCounterexample c;
  c.n = n;
  c.p = p;
  c.a = a;
  c.b = b;
  c.axis = axis;
  if (oblique < 0) {
    c.structure = SingletonCounterexample::Structure::collinear;
    c.profile_dim = n - 1;
  } else {
    c.structure = SingletonCounterexample::Structure::oblique;
    c.oblique_axis = oblique;
    c.tau = a[oblique];
    c.profile_dim = n - 2;
  }
  c.profile = RadialProfile{c.profile_dim, static_cast<double>(n)};
  return c;
}

CounterexampleReport verify_singleton(const SingletonCounterexample& c, double target,
                                      long long layers, unsigned threads) {
  CounterexampleReport r;
  r.p = c.p;
  r.a = c.a;
  r.b = c.b;
  r.target = target;
  // remaining coordinates carry (1+|x|^2)^(-n); its p-mass scales everything
  const Enclosure prof = radial_profile_mass(c.profile_dim, c.n * c.p);

  if (c.structure == SingletonCounterexample::Structure::collinear) {
    r.kind = "singleton-collinear";
    const IntervalCounterexample base = make_interval_family(c.p);
    r.shift_mass = mul(exact_value(base.shift_mass_exact()), prof);
    r.sine_mass = mul(sum_with_tail(base.sine_series(), layers, threads), prof);

    SeriesSpec mass = base.mass_series();
    const auto base_term = mass.term;
    const auto base_lower = mass.partial_lower->value;
    const double low = prof.lower;
    mass.term = [base_term, low](long long k) { return base_term(k) * low; };
    mass.partial_lower =
        PartialLowerBound{[base_lower, low](long long K) { return base_lower(K) * low; },
                          mass.partial_lower->formula + "-scaled"};
    mass.label = "singleton collinear p-mass";
    r.mass = certify_divergence(mass, target, threads);
    return r;
  }

  r.kind = "singleton-oblique";
  const double tau = std::fabs(c.tau);
  const double guard = std::min(1.0, tau / 2.0);  // keeps neighbor bumps disjoint
  const double area = guard * guard / 2.0;        // bump area at layer 0
  const double low = prof.lower;

  SeriesSpec mass;
  mass.term = [area, low](long long k) {
    return static_cast<double>(count_layer_full(2, k)) * area *
           std::pow(1.0 + static_cast<double>(k), -2.0) * low;
  };
  mass.partial_lower = PartialLowerBound{
      [lc = area * low](long long K) {
        return lc * std::log(1.0 + static_cast<double>(K));
      },
      "layer-log-scaled"};
  mass.label = "singleton oblique p-mass";
  mass.direct_cap = safe_layer_cap(2);
  r.mass = certify_divergence(mass, target, threads);

  SeriesSpec sine;
  const double moment_scale = std::pow(guard, 2.0 + c.p) * simplex_moment(2, 1.0, c.p);
  sine.term = [moment_scale, e = 2.0 + c.p](long long k) {
    return static_cast<double>(count_layer_full(2, k)) * moment_scale *
           std::pow(1.0 + static_cast<double>(k), -e);
  };
  sine.upper_envelope = PowerEnvelope{4.0 * moment_scale, -(1.0 + c.p), 1.0, 0};
  sine.label = "singleton oblique sine mass";
  sine.direct_cap = safe_layer_cap(2);
  const Enclosure raw = sum_with_tail(sine, layers, threads);
  r.sine_mass = mul(make_enclosure(std::pow(std::sin(1.0), c.p) * raw.lower, raw.upper,
                                   Provenance::series_tail),
                    prof);

  // the shift walks one site along each active axis: the layer index moves
  // by +2 on the (k+1) all-nonnegative sites, by -2 on the (k-1) all-negative
  // ones, and the rest cancel exactly
  auto R2 = [area](long long j) {
    return area * std::pow(1.0 + static_cast<double>(j), -2.0);
  };
  SeriesSpec shift;
  shift.term = [R2](long long k) {
    const double out = static_cast<double>(k + 1) * (R2(k) - R2(k + 2));
    const double in =
        k >= 2 ? static_cast<double>(k - 1) * (R2(k - 2) - R2(k)) : 0.0;
    return out + in;
  };
  // quadrant counts <= k+1; two-step differences <= 4*area*(k-1)^(-3) and
  // (k-1)^(-3) <= 27 (k+1)^(-3) once k >= 2
  shift.upper_envelope = PowerEnvelope{216.0 * area, -2.0, 1.0, 2};
  shift.label = "singleton oblique shift mass";
  shift.direct_cap = safe_layer_cap(2);
  r.shift_mass = mul(sum_with_tail(shift, layers, threads), prof);
  return r;
}

std::vector<LayerRow> layer_table(const LatticeCounterexample& c, long long layers) {
  layers = std::min(layers, safe_layer_cap(c.n) - 64);
  if (layers < 1) throw std::invalid_argument("need at least one layer");
  const SeriesSpec mass = c.mass_series();
  const SeriesSpec sine = c.sine_series();
  const SeriesSpec shift = c.shift_series();
  std::vector<LayerRow> rows;
  rows.reserve(static_cast<size_t>(layers));
  // plain running sums: the table feeds plots, certificates come from the
  // series machinery above
  double m = 0.0, sn = 0.0, sh = 0.0;
  for (long long k = 0; k < layers; ++k) {
    m += mass.term(k);
    sn += sine.term(k);
    sh += shift.term(k);
    rows.push_back(LayerRow{k, m, sn, sh});
  }
  return rows;
}

std::vector<LayerRow> layer_table(const IntervalCounterexample& c, long long layers) {
  if (layers < 1) throw std::invalid_argument("need at least one layer");
  const SeriesSpec mass = c.mass_series();
  const SeriesSpec sine = c.sine_series();
  std::vector<LayerRow> rows;
  rows.reserve(static_cast<size_t>(layers));
  double m = 0.0, sn = 0.0, sh = 0.0;
  for (long long k = 0; k < layers; ++k) {
    m += mass.term(k);
    sn += sine.term(k);
    sh += k == 0 ? c.family.size(0) - c.family.size(1)
                 : c.family.size(k - 1) - c.family.size(k + 1);
    rows.push_back(LayerRow{k, m, sn, sh});
  }
  return rows;
}

}  // namespace lpcrit
