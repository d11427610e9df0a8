#include "lpcrit/pi_parse.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lpcrit {

namespace {

// plain decimal literal: digits with at most one dot, no exponent
bool take_number(const std::string& s, size_t& i, double& out) {
  size_t j = i;
  bool seen_digit = false, seen_dot = false;
  while (j < s.size()) {
    if (std::isdigit(static_cast<unsigned char>(s[j]))) {
      seen_digit = true;
      ++j;
    } else if (s[j] == '.' && !seen_dot) {
      seen_dot = true;
      ++j;
    } else {
      break;
    }
  }
  if (!seen_digit) return false;
  out = std::stod(s.substr(i, j - i));
  i = j;
  return true;
}

[[noreturn]] void bad(const std::string& token) {
  throw std::invalid_argument("cannot parse scalar '" + token + "'");
}

}  // namespace

double PiScalar::value() const {
  double v = num / den;
  for (int k = 0; k < pi_power; ++k) v *= std::numbers::pi;
  for (int k = 0; k > pi_power; --k) v /= std::numbers::pi;
  return v;
}

PiScalar parse_pi_scalar(const std::string& token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) bad(token);

  size_t i = 0;
  double sign = 1.0;
  if (s[i] == '+' || s[i] == '-') {
    if (s[i] == '-') sign = -1.0;
    ++i;
  }

  double coef = 1.0;
  const bool has_coef = take_number(s, i, coef);
  if (has_coef && i < s.size() && s[i] == '*') ++i;

  bool has_pi = false;
  if (i < s.size() && s.compare(i, 2, "pi") == 0) {
    has_pi = true;
    i += 2;
  }
  if (!has_coef && !has_pi) bad(token);

  double den = 1.0;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!take_number(s, i, den) || den == 0.0) bad(token);
  }
  if (i != s.size()) bad(token);

  PiScalar r;
  r.num = sign * coef;
  r.den = den;
  r.pi_power = has_pi ? 1 : 0;
  r.symbolic = has_pi;
  if (!std::isfinite(r.num) || !std::isfinite(r.den)) bad(token);
  return r;
}

PiScalar operator*(const PiScalar& a, const PiScalar& b) {
  PiScalar r;
  r.num = a.num * b.num;
  r.den = a.den * b.den;
  r.pi_power = a.pi_power + b.pi_power;
  r.symbolic = a.symbolic || b.symbolic;
  return r;
}

std::optional<bool> in_pi_lattice(const PiScalar& product) {
  if (product.num == 0.0) return true;  // zero lies on every lattice
  if (!product.symbolic) return std::nullopt;
  if (product.pi_power != 1) return false;  // rational, or rational * pi^2...
  // q * pi with q = num/den: on the lattice exactly when q is an integer
  const double q = std::round(product.num / product.den);
  return q * product.den == product.num;
}

}  // namespace lpcrit
