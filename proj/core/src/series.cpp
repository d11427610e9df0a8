#include "lpcrit/series.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <vector>

namespace lpcrit {

double PowerEnvelope::operator()(long long k) const {
  return coeff * std::pow(static_cast<double>(k) + shift, exponent);
}

double PowerEnvelope::tail_from(long long K) const {
  if (!summable())
    throw std::domain_error("envelope exponent >= -1: tail is not summable");
  if (K < valid_from)
    throw std::invalid_argument("tail requested before the envelope is valid");
  if (coeff < 0.0) throw std::invalid_argument("envelope coefficient must be >= 0");
  // sum_{k>=K} w(k) <= w(K) + integral_{K}^{inf} w(x) dx for decreasing w
  const double base = static_cast<double>(K) + shift;
  const double head = coeff * std::pow(base, exponent);
  const double integral = coeff * std::pow(base, exponent + 1.0) / (-exponent - 1.0);
  return head + integral;
}

namespace {

struct KahanAcc {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

double reduce_blocks(const std::vector<double>& blocks) {
  KahanAcc acc;
  for (double b : blocks) acc.add(b);
  return acc.sum;
}

}  // namespace

double blocked_kahan_sum(long long n, const std::function<double(long long)>& term,
                         unsigned threads, long long block) {
  if (n <= 0) return 0.0;
  if (block <= 0) throw std::invalid_argument("block size must be positive");
  const long long nblocks = (n + block - 1) / block;
  std::vector<double> partial(static_cast<size_t>(nblocks), 0.0);

  auto run = [&](long long b0, long long b1) {
    for (long long b = b0; b < b1; ++b) {
      KahanAcc acc;
      const long long lo = b * block;
      const long long hi = std::min(n, lo + block);
      for (long long i = lo; i < hi; ++i) acc.add(term(i));
      partial[static_cast<size_t>(b)] = acc.sum;
    }
  };

  if (threads <= 1 || nblocks == 1) {
    run(0, nblocks);
  } else {
    const unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(nblocks));
    std::vector<std::future<void>> jobs;
    const long long per = (nblocks + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
      const long long b0 = static_cast<long long>(t) * per;
      const long long b1 = std::min<long long>(nblocks, b0 + per);
      if (b0 >= b1) break;
      jobs.push_back(std::async(std::launch::async, run, b0, b1));
    }
    for (auto& j : jobs) j.get();
  }
  return reduce_blocks(partial);
}

Enclosure sum_with_tail(const SeriesSpec& spec, long long layers, unsigned threads) {
  if (!spec.term) throw std::invalid_argument("series has no term function");
  layers = std::min(layers, spec.direct_cap - 64);  // keep the tail spot-checks legal
  if (layers < 1) throw std::invalid_argument("need at least one summed term");
  if (!spec.upper_envelope)
    throw std::domain_error("series declares no upper envelope; tail bound unavailable");
  const PowerEnvelope& env = *spec.upper_envelope;
  if (!env.summable())
    throw std::domain_error("tail test failed: envelope exponent " +
                            std::to_string(env.exponent) + " >= -1 (series not summable)");

  const long long tail_start = spec.first + layers;
  if (tail_start < env.valid_from)
    throw std::invalid_argument("partial sum too short: tail starts before the envelope is valid");

  // spot-check that the declared envelope dominates the first tail terms
  for (long long k : {tail_start, tail_start + 1, tail_start + 7, tail_start + 63}) {
    const double t = spec.term(k);
    if (!(t >= 0.0)) throw std::domain_error("series term is negative or NaN");
    if (t > env(k) * (1.0 + 1e-9) + 1e-300)
      throw std::domain_error("declared envelope does not dominate the tail terms");
  }

  const double partial = blocked_kahan_sum(
      layers, [&](long long i) { return spec.term(spec.first + i); }, threads);
  if (!(partial >= 0.0) || !std::isfinite(partial))
    throw std::domain_error("partial sum is not a finite nonnegative value");
  const double slack = 1e-14 * partial;
  const double tail = env.tail_from(tail_start);
  return make_enclosure(std::max(0.0, partial - slack), partial + slack + tail,
                        Provenance::series_tail);
}

DivergenceCertificate certify_divergence(const SeriesSpec& spec, double M, unsigned threads) {
  if (!spec.term) throw std::invalid_argument("series has no term function");
  if (spec.upper_envelope && spec.upper_envelope->summable())
    throw std::domain_error(
        "series is summable under its own envelope; divergence cannot be certified");
  if (!std::isfinite(M)) throw std::invalid_argument("threshold must be finite");
  if (M <= 0.0) return DivergenceCertificate{M, 0, 0.0, "empty-sum"};

  if (spec.partial_lower) {
    const auto& L = spec.partial_lower->value;
    // least K with L(K) >= M: exponential bracket, then bisect (L monotone)
    long long hi = 1;
    while (L(hi) < M) {
      if (hi > (1LL << 58))
        throw std::domain_error("partial-sum lower bound never reaches the threshold");
      hi *= 2;
    }
    long long lo = hi / 2;  // L(lo) < M or lo == 0
    while (lo + 1 < hi) {
      const long long mid = lo + (hi - lo) / 2;
      (L(mid) >= M ? hi : lo) = mid;
    }
    const long long K = hi;
    if (K <= std::min<long long>(spec.direct_cap, 1000000)) {
      const double direct = blocked_kahan_sum(
          K, [&](long long i) { return spec.term(spec.first + i); }, threads);
      // enumeration carries rounding of its own; flag genuine contradictions only
      if (direct < M * (1.0 - 1e-12))
        throw std::logic_error("analytic lower bound contradicts direct enumeration");
    }
    return DivergenceCertificate{M, K, L(K), spec.partial_lower->formula};
  }

  // direct enumeration; terms are exact or certified lower bounds themselves
  KahanAcc acc;
  const long long cap = 200000000;
  for (long long i = 0; i < cap; ++i) {
    const double t = spec.term(spec.first + i);
    if (!(t >= 0.0)) throw std::domain_error("series term is negative or NaN");
    acc.add(t);
    const double lower = acc.sum * (1.0 - 1e-13);
    if (lower >= M)
      return DivergenceCertificate{M, i + 1, lower, "direct-enumeration"};
  }
  throw std::domain_error("threshold not reached within the enumeration cap");
}

}  // namespace lpcrit
