#include <doctest.h>

#include <numbers>
#include <string>
#include <vector>

#include "lpcrit/json_io.hpp"

using namespace lpcrit;

namespace {
constexpr double pi = std::numbers::pi;

std::vector<std::string> keys(const json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}
}  // namespace

TEST_CASE("enclosures serialize with hyphenated provenance names") {
  const auto e = make_enclosure(1.0, 2.0, Provenance::series_tail);
  const json j = to_json(e);
  CHECK(j["lower"] == 1.0);
  CHECK(j["upper"] == 2.0);
  CHECK(j["provenance"] == "series-tail");
  CHECK(to_json(exact_value(1.0))["provenance"] == "closed-form");
  CHECK(to_json(make_enclosure(0, 1, Provenance::monte_carlo_estimate))["provenance"] ==
        "monte-carlo-estimate");
  CHECK(to_json(make_enclosure(0, 1, Provenance::quadrature))["provenance"] ==
        "quadrature");
}

TEST_CASE("bound certificates keep a stable key order") {
  const auto norms = norms_for_box(0.0, 1.0, pi / 2.0, 1.0, 2.0);
  const auto cert = certify_bound(pi / 2.0, 1.0, 2.0, norms);
  const json j = to_json(cert);
  CHECK(keys(j) == std::vector<std::string>{"schema_version", "p", "quantization",
                                            "decomposition", "norms", "bound"});
  CHECK(j["schema_version"] == 1);
  CHECK(j["p"] == 2.0);
  CHECK(j["bound"] == cert.bound);
  CHECK(keys(j["quantization"]) ==
        std::vector<std::string>{"product", "nearest", "distance", "threshold",
                                 "violated"});
  CHECK(keys(j["decomposition"]) ==
        std::vector<std::string>{"product", "whole", "tau", "delta",
                                 "multiplier_bound", "translation_check"});
  CHECK(keys(j["norms"]) == std::vector<std::string>{"shift_norm", "sine_norm"});
  CHECK(j["decomposition"]["translation_check"]["separated"] == true);
}

TEST_CASE("scalar reports carry t and s, vector reports carry a and b") {
  const auto flat = verify_interval_family(2.0, 1.0, 2000);
  const json jf = to_json(flat);
  CHECK(keys(jf) == std::vector<std::string>{"schema_version", "kind", "p", "t", "s",
                                             "shift_mass", "sine_mass", "target",
                                             "mass"});
  CHECK(jf["kind"] == "interval-family");
  CHECK(jf["t"] == pi);
  CHECK(jf["mass"]["witness"] == 13);
  CHECK(jf["mass"]["formula"] == "harmonic-log");

  const auto nd = verify_lattice_nd(make_lattice_nd(2, 0.7, 1.0), 1.0, 2000);
  const json jn = to_json(nd);
  CHECK(keys(jn) == std::vector<std::string>{"schema_version", "kind", "p", "a", "b",
                                             "shift_mass", "sine_mass", "target",
                                             "mass"});
  CHECK(jn["a"] == json::array({pi, 0.0}));
  CHECK(jn["b"] == json::array({1.0, 0.0}));
}

TEST_CASE("layer csv is headed and fixed-precision") {
  const auto rows = layer_table(make_interval_family(2.0), 3);
  const std::string csv = layer_csv(rows);
  CHECK(csv.rfind("layer,partial_mass_lower,partial_sine_upper,partial_shift_upper\n",
                  0) == 0);
  // one line per row plus the header, every line newline-terminated
  size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 4);
  CHECK(csv.find("0,0.25,") != std::string::npos);
  CHECK(csv.back() == '\n');

  CHECK(layer_csv({}) ==
        "layer,partial_mass_lower,partial_sine_upper,partial_shift_upper\n");
}
