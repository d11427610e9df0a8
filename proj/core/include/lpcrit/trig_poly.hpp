#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpcrit/enclosure.hpp"

namespace lpcrit {

// dyadic rational num / 2^log2_den, always kept in lowest terms
struct Rat {
  long long num = 0;
  int log2_den = 0;

  Rat() = default;
  Rat(long long n) : num(n) {}  // NOLINT: implicit integer lift is the point
  Rat(long long n, int e);

  double value() const;
  Rat operator-() const { return {-num, log2_den, 0}; }
  bool zero() const { return num == 0; }
  std::string str() const;

 private:
  Rat(long long n, int e, int) : num(n), log2_den(e) {}  // no normalization
  friend Rat operator+(Rat a, Rat b);
  friend Rat operator*(Rat a, Rat b);
  friend Rat half(Rat a);
};

Rat operator+(Rat a, Rat b);
Rat operator*(Rat a, Rat b);
Rat half(Rat a);
bool operator==(Rat a, Rat b);

// finite combination of cos<nu,x> and sin<nu,x> over integer frequency
// vectors nu, stored canonically: the first nonzero entry of nu is positive
// and the sin coefficient at nu = 0 is dropped
class TrigPolynomial {
 public:
  explicit TrigPolynomial(int dim);

  int dim() const { return dim_; }
  bool zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // accumulate coeff_cos*cos<nu,x> + coeff_sin*sin<nu,x>
  void add_term(std::vector<long long> nu, Rat coeff_cos, Rat coeff_sin);

  double eval(const std::vector<double>& x) const;
  // sum of |coefficients|; dominates the sup norm
  double l1() const;
  // [max over a fixed grid, l1]
  Enclosure sup_norm(int grid_points = 4096) const;
  std::string str() const;

  const std::map<std::vector<long long>, std::pair<Rat, Rat>>& terms() const {
    return terms_;
  }

 private:
  int dim_;
  std::map<std::vector<long long>, std::pair<Rat, Rat>> terms_;
};

TrigPolynomial tp_const(int dim, Rat c);
TrigPolynomial tp_cos(int dim, const std::vector<long long>& nu);
TrigPolynomial tp_sin(int dim, const std::vector<long long>& nu);
TrigPolynomial operator+(const TrigPolynomial& a, const TrigPolynomial& b);
TrigPolynomial operator*(const TrigPolynomial& a, const TrigPolynomial& b);
TrigPolynomial scale(Rat c, const TrigPolynomial& a);

// sin(m*u) / sin(u) as a polynomial in cos: sum of cos((m-1-2i)u), i < m
TrigPolynomial folded_sine_ratio(int dim, int axis, int m);

// multipliers Q_1..Q_n with sin<b,x> = sum_j Q_j(x) sin(x_j) pointwise and
// l1(Q_j) <= |b_j|; decompose(-b) == -decompose(b)
std::vector<TrigPolynomial> decompose(const std::vector<long long>& b);

// max |sin<b,x> - sum Q_j(x) sin(x_j)| over `points` pseudo-random samples
double identity_residual(const std::vector<long long>& b,
                         const std::vector<TrigPolynomial>& q, int points,
                         unsigned long long seed = 12345);

}  // namespace lpcrit
