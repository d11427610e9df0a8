#include "lpcrit/json_io.hpp"

#include <sstream>

namespace lpcrit {

json to_json(const Enclosure& e) {
  return json{{"lower", e.lower}, {"upper", e.upper},
              {"provenance", to_string(e.provenance)}};
}

json to_json(const QuantizationReport& r) {
  return json{{"product", r.product},
              {"nearest", r.nearest},
              {"distance", r.distance},
              {"threshold", r.threshold},
              {"violated", r.violated}};
}

json to_json(const ShiftSetCheck& c) {
  return json{{"points", c.points},
              {"min_distance", c.min_distance},
              {"delta", c.delta},
              {"separated", c.separated}};
}

json to_json(const Decomposition& d) {
  return json{{"product", d.product},
              {"whole", d.whole},
              {"tau", d.tau},
              {"delta", d.delta},
              {"multiplier_bound", d.multiplier_bound},
              {"translation_check", to_json(d.check)}};
}

json to_json(const NormPair& n) {
  return json{{"shift_norm", to_json(n.shift_norm)}, {"sine_norm", to_json(n.sine_norm)}};
}

json to_json(const DivergenceCertificate& c) {
  return json{{"threshold", c.threshold},
              {"witness", c.witness},
              {"partial_lower", c.partial_lower},
              {"formula", c.formula}};
}

json to_json(const BoundCertificate& c) {
  return json{{"schema_version", kSchemaVersion},
              {"p", c.p},
              {"quantization", to_json(c.quantization)},
              {"decomposition", to_json(c.decomposition)},
              {"norms", to_json(c.norms)},
              {"bound", c.bound}};
}

json to_json(const CounterexampleReport& r) {
  json out{{"schema_version", kSchemaVersion}, {"kind", r.kind}, {"p", r.p}};
  if (r.a.empty()) {
    out["t"] = r.t;
    out["s"] = r.s;
  } else {
    out["a"] = r.a;
    out["b"] = r.b;
  }
  out["shift_mass"] = to_json(r.shift_mass);
  out["sine_mass"] = to_json(r.sine_mass);
  out["target"] = r.target;
  out["mass"] = to_json(r.mass);
  return out;
}

std::string layer_csv(const std::vector<LayerRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "layer,partial_mass_lower,partial_sine_upper,partial_shift_upper\n";
  for (const LayerRow& r : rows) {
    os << r.layer << ',' << r.partial_mass_lower << ',' << r.partial_sine_upper << ','
       << r.partial_shift_upper << '\n';
  }
  return os.str();
}

}  // namespace lpcrit
