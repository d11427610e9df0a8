#include "lpcrit/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lpcrit {

namespace {

long long checked_mul_ll(long long a, long long b) {
  const __int128 w = static_cast<__int128>(a) * b;
  if (w > std::numeric_limits<long long>::max() ||
      w < std::numeric_limits<long long>::min())
    throw std::overflow_error("coefficient overflow");
  return static_cast<long long>(w);
}

long long shifted(long long n, int by) {
  long long r = n;
  for (int i = 0; i < by; ++i) r = checked_mul_ll(r, 2);
  return r;
}

}  // namespace

Rat::Rat(long long n, int e) : num(n), log2_den(e) {
  if (e < 0) throw std::invalid_argument("denominator exponent must be nonnegative");
  if (num == 0) {
    log2_den = 0;
    return;
  }
  while (log2_den > 0 && num % 2 == 0) {
    num /= 2;
    --log2_den;
  }
}

double Rat::value() const { return std::ldexp(static_cast<double>(num), -log2_den); }

std::string Rat::str() const {
  std::ostringstream os;
  if (log2_den == 0) {
    os << num;
  } else {
    os << num << "/" << (1LL << log2_den);
  }
  return os.str();
}

Rat operator+(Rat a, Rat b) {
  const int e = std::max(a.log2_den, b.log2_den);
  return Rat(shifted(a.num, e - a.log2_den) + shifted(b.num, e - b.log2_den), e);
}

Rat operator*(Rat a, Rat b) {
  return Rat(checked_mul_ll(a.num, b.num), a.log2_den + b.log2_den);
}

Rat half(Rat a) { return Rat(a.num, a.log2_den + 1); }

bool operator==(Rat a, Rat b) { return a.num == b.num && a.log2_den == b.log2_den; }

TrigPolynomial::TrigPolynomial(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be at least 1");
}

void TrigPolynomial::add_term(std::vector<long long> nu, Rat coeff_cos, Rat coeff_sin) {
  if (static_cast<int>(nu.size()) != dim_)
    throw std::invalid_argument("frequency dimension mismatch");
  const auto lead = std::find_if(nu.begin(), nu.end(), [](long long v) { return v != 0; });
  if (lead == nu.end()) {
    coeff_sin = Rat(0);  // sin<0,x> vanishes identically
  } else if (*lead < 0) {
    for (long long& w : nu) w = -w;  // flip: cos even, sin odd
    coeff_sin = -coeff_sin;
  }
  if (coeff_cos.zero() && coeff_sin.zero()) return;

  auto it = terms_.find(nu);
  if (it == terms_.end()) {
    terms_.emplace(std::move(nu), std::make_pair(coeff_cos, coeff_sin));
    return;
  }
  it->second.first = it->second.first + coeff_cos;
  it->second.second = it->second.second + coeff_sin;
  if (it->second.first.zero() && it->second.second.zero()) terms_.erase(it);
}

double TrigPolynomial::eval(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("evaluation point dimension mismatch");
  double acc = 0.0;
  for (const auto& [nu, cs] : terms_) {
    double phase = 0.0;
    for (int i = 0; i < dim_; ++i) phase += static_cast<double>(nu[i]) * x[i];
    acc += cs.first.value() * std::cos(phase) + cs.second.value() * std::sin(phase);
  }
  return acc;
}

double TrigPolynomial::l1() const {
  double s = 0.0;
  for (const auto& [nu, cs] : terms_)
    s += std::fabs(cs.first.value()) + std::fabs(cs.second.value());
  return s;
}

Enclosure TrigPolynomial::sup_norm(int grid_points) const {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<double> x(dim_);
  double best = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    for (double& c : x) c = angle(rng);
    best = std::max(best, std::fabs(eval(x)));
  }
  return make_enclosure(std::min(best, l1()), l1(), Provenance::closed_form);
}

std::string TrigPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rat& c, const char* fn, const std::vector<long long>& nu) {
    if (c.zero()) return;
    Rat mag = c;
    const bool neg = mag.num < 0;
    if (neg) mag = -mag;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (!(mag == Rat(1))) os << mag.str() << "*";
    os << fn << "(";
    bool lead = true;
    for (int i = 0; i < dim_; ++i) {
      if (nu[i] == 0) continue;
      if (!lead && nu[i] > 0) os << "+";
      if (nu[i] == -1)
        os << "-";
      else if (nu[i] != 1)
        os << nu[i] << " ";
      os << "x" << (i + 1);
      lead = false;
    }
    if (lead) os << "0";
    os << ")";
  };
  for (const auto& [nu, cs] : terms_) {
    emit(cs.first, "cos", nu);
    emit(cs.second, "sin", nu);
  }
  return os.str();
}

TrigPolynomial tp_const(int dim, Rat c) {
  TrigPolynomial p(dim);
  p.add_term(std::vector<long long>(dim, 0), c, Rat(0));
  return p;
}

TrigPolynomial tp_cos(int dim, const std::vector<long long>& nu) {
  TrigPolynomial p(dim);
  p.add_term(nu, Rat(1), Rat(0));
  return p;
}

TrigPolynomial tp_sin(int dim, const std::vector<long long>& nu) {
  TrigPolynomial p(dim);
  p.add_term(nu, Rat(0), Rat(1));
  return p;
}

TrigPolynomial operator+(const TrigPolynomial& a, const TrigPolynomial& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  TrigPolynomial out = a;
  for (const auto& [nu, cs] : b.terms()) out.add_term(nu, cs.first, cs.second);
  return out;
}

TrigPolynomial operator*(const TrigPolynomial& a, const TrigPolynomial& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  TrigPolynomial out(a.dim());
  std::vector<long long> sum(a.dim()), diff(a.dim());
  for (const auto& [alpha, ab] : a.terms()) {
    for (const auto& [beta, cd] : b.terms()) {
      for (int i = 0; i < a.dim(); ++i) {
        sum[i] = alpha[i] + beta[i];
        diff[i] = alpha[i] - beta[i];
      }
      const Rat A1 = ab.first, B1 = ab.second;
      const Rat A2 = cd.first, B2 = cd.second;
      // product-to-sum at alpha+beta and alpha-beta
      out.add_term(sum, half(A1 * A2) + (-half(B1 * B2)),
                   half(A1 * B2) + half(B1 * A2));
      out.add_term(diff, half(A1 * A2) + half(B1 * B2),
                   half(B1 * A2) + (-half(A1 * B2)));
    }
  }
  return out;
}

TrigPolynomial scale(Rat c, const TrigPolynomial& a) {
  TrigPolynomial out(a.dim());
  for (const auto& [nu, cs] : a.terms()) out.add_term(nu, c * cs.first, c * cs.second);
  return out;
}

TrigPolynomial folded_sine_ratio(int dim, int axis, int m) {
  if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
  if (axis < 0 || axis >= dim) throw std::invalid_argument("axis out of range");
  TrigPolynomial p(dim);
  std::vector<long long> nu(dim, 0);
  for (int i = 0; i < m; ++i) {
    nu[axis] = m - 1 - 2 * i;
    p.add_term(nu, Rat(1), Rat(0));
  }
  return p;
}

std::vector<TrigPolynomial> decompose(const std::vector<long long>& b) {
  const int n = static_cast<int>(b.size());
  if (n < 1) throw std::invalid_argument("need at least one frequency");
  std::vector<TrigPolynomial> out(n, TrigPolynomial(n));
  TrigPolynomial prefix = tp_const(n, Rat(1));
  for (int j = 0; j < n; ++j) {
    if (b[j] == 0) continue;
    const long long m = std::llabs(b[j]);
    if (m > 64) throw std::invalid_argument("frequency too large");
    const Rat sign(b[j] > 0 ? 1 : -1);
    std::vector<long long> rest(n, 0);
    for (int i = j + 1; i < n; ++i) rest[i] = b[i];
    out[j] = scale(sign, prefix * folded_sine_ratio(n, j, static_cast<int>(m)) *
                             tp_cos(n, rest));
    std::vector<long long> unit(n, 0);
    unit[j] = m;
    prefix = prefix * tp_cos(n, unit);
  }
  return out;
}

double identity_residual(const std::vector<long long>& b,
                         const std::vector<TrigPolynomial>& q, int points,
                         unsigned long long seed) {
  const int n = static_cast<int>(b.size());
  if (static_cast<int>(q.size()) != n)
    throw std::invalid_argument("multiplier count must match dimension");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::vector<double> x(n);
  double worst = 0.0;
  for (int k = 0; k < points; ++k) {
    double phase = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] = angle(rng);
      phase += static_cast<double>(b[i]) * x[i];
    }
    double rhs = 0.0;
    for (int j = 0; j < n; ++j) rhs += q[j].eval(x) * std::sin(x[j]);
    worst = std::max(worst, std::fabs(std::sin(phase) - rhs));
  }
  return worst;
}

}  // namespace lpcrit
