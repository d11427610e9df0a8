#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpcrit/enclosure.hpp"
#include "lpcrit/function_model.hpp"
#include "lpcrit/series.hpp"

namespace lpcrit {

// every generator certifies the same three facts about its function:
// the shift-difference mass is finite, the sine-weighted mass is finite,
// and the p-mass itself exceeds any requested target
struct CounterexampleReport {
  std::string kind;
  double p = 0.0;
  double t = 0.0, s = 0.0;     // scalar data when one-dimensional
  std::vector<double> a, b;    // vector data otherwise
  Enclosure shift_mass;        // ||f(.+t) - f||_p^p
  Enclosure sine_mass;         // ||sin(s.) f||_p^p
  DivergenceCertificate mass;  // partial p-mass beats the target
  double target = 0.0;
};

// disjoint intervals of size 1/4 at the origin and 1/(5|k|) at k*pi;
// the t = pi shift telescopes to mass exactly 1/2 for every p
struct IntervalCounterexample {
  IntervalFamily1D family;
  double p = 0.0;

  double shift_mass_exact() const;  // 2 * size(0)
  SeriesSpec sine_series() const;   // summable, terms indexed by |k|
  SeriesSpec mass_series() const;   // divergent, log-shaped partial lower
};

IntervalCounterexample make_interval_family(double p);
CounterexampleReport verify_interval_family(double p, double target,
                                            long long layers = 100000,
                                            unsigned threads = 1);

// t = 0 leaves nothing to shift; 1/x on (0,1] keeps sin(sx)/x bounded
// while the p-mass blows up along dyadic shells
CounterexampleReport verify_vanishing_shift(double s, double p, double target,
                                            unsigned threads = 1);

// s = 0 kills the sine weight; a slow two-sided profile (1+|x|)^(-a)
// with a*p <= 1 diverges while its shift difference stays p-summable
CounterexampleReport verify_vanishing_frequency(double t, double p, double target,
                                                std::optional<double> a = std::nullopt,
                                                unsigned threads = 1);
double default_profile_exponent(double p);

// corner-simplex bumps on (pi Z)^n with sizes (1+|lambda|_1)^(-gamma);
// admissible when (n-1)/n < gamma <= 1, and the sine series additionally
// needs gamma > n/(n+p) or its tail test refuses
struct LatticeCounterexample {
  int n = 0;
  double gamma = 0.0;
  double p = 0.0;
  SimplexFamily family;

  SeriesSpec mass_series() const;
  SeriesSpec sine_series() const;   // upper terms; lower carries sin(1)^p
  SeriesSpec shift_series() const;
  double mass_exponent() const;     // n - 1 - gamma*n
  double sine_exponent() const;     // n - 1 - gamma*(n+p)
  double shift_exponent() const;    // n - 2 - gamma*n
};

LatticeCounterexample make_lattice_nd(int n, double gamma, double p);

// layers is the direct-summation budget for the two finite series
CounterexampleReport verify_lattice_nd(const LatticeCounterexample& c, double target,
                                       long long layers = 200000, unsigned threads = 1);

// single violating pair (a, b) with <a, b> = +-pi: b is a signed axis
// vector and a pairs +-pi on that axis with at most one oblique component
struct SingletonCounterexample {
  enum class Structure { collinear, oblique };
  Structure structure = Structure::collinear;
  int n = 0;
  double p = 0.0;
  std::vector<double> a, b;
  int axis = 0;            // axis selected by b
  int oblique_axis = -1;   // second active axis, oblique case only
  double tau = 0.0;        // oblique component of a
  RadialProfile profile;   // factor on the remaining coordinates
  int profile_dim = 0;
};

SingletonCounterexample make_singleton_nd(const std::vector<double>& a,
                                          const std::vector<double>& b, double p);
CounterexampleReport verify_singleton(const SingletonCounterexample& c, double target,
                                      long long layers = 200000, unsigned threads = 1);

// cumulative table for plots and CSV export: partial sums of the three
// series after each of the first `layers` layers
struct LayerRow {
  long long layer = 0;
  double partial_mass_lower = 0.0;
  double partial_sine_upper = 0.0;
  double partial_shift_upper = 0.0;
};

std::vector<LayerRow> layer_table(const LatticeCounterexample& c, long long layers);
std::vector<LayerRow> layer_table(const IntervalCounterexample& c, long long layers);

}  // namespace lpcrit
