#pragma once

#include <functional>
#include <optional>
#include <string>

#include "lpcrit/enclosure.hpp"

namespace lpcrit {

// Power-law majorant w(k) = coeff * (k + shift)^exponent, valid for k >= valid_from.
// The integral test turns it into a tail bound when exponent < -1.
struct PowerEnvelope {
  double coeff = 1.0;
  double exponent = -2.0;
  double shift = 1.0;
  long long valid_from = 0;

  double operator()(long long k) const;
  bool summable() const { return exponent < -1.0; }
  // Upper bound for sum over k >= K (requires summable(), K >= valid_from).
  double tail_from(long long K) const;
};

// Closed-form lower bound L(K) <= sum of the first K terms, monotone in K.
struct PartialLowerBound {
  std::function<double(long long)> value;
  std::string formula;  // human-readable tag recorded in certificates
};

// A nonnegative series sum_{k >= first} term(k) together with the analytic
// facts certification needs: an upper envelope for tails (convergent case)
// and/or a closed-form partial-sum lower bound (divergent case).
struct SeriesSpec {
  std::function<double(long long)> term;
  long long first = 0;
  std::optional<PowerEnvelope> upper_envelope;
  std::optional<PartialLowerBound> partial_lower;
  std::string label;
  // largest index count that term() can be asked to enumerate directly
  // (exact integer layer counts stop fitting machine words eventually)
  long long direct_cap = 1000000;
};

// Kahan-compensated sum of term(i) for i in [0, n), accumulated in fixed-size
// blocks so the result is bit-identical for any thread count.
double blocked_kahan_sum(long long n, const std::function<double(long long)>& term,
                         unsigned threads = 1, long long block = 4096);

// Partial sum of the first `layers` terms plus the integral-test tail bound of
// everything beyond. Refuses when the declared envelope is not summable.
Enclosure sum_with_tail(const SeriesSpec& spec, long long layers, unsigned threads = 1);

// Witness that partial sums exceed a threshold. `witness` counts leading
// terms: the certified lower bound covers sum_{first <= k < first + witness}.
struct DivergenceCertificate {
  double threshold = 0.0;
  long long witness = 0;
  double partial_lower = 0.0;  // certified lower bound of that partial sum
  std::string formula;
};

// Finds the least witness whose certified partial-sum lower bound reaches M.
// Uses the declared closed-form bound when present (so astronomically large
// witnesses never require enumeration), otherwise enumerates terms directly.
// Refuses series whose own envelope is summable.
DivergenceCertificate certify_divergence(const SeriesSpec& spec, double M,
                                         unsigned threads = 1);

}  // namespace lpcrit
