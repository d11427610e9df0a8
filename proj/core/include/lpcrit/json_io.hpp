#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lpcrit/counterexamples.hpp"
#include "lpcrit/criterion.hpp"
#include "lpcrit/enclosure.hpp"
#include "lpcrit/series.hpp"

namespace lpcrit {

// key order is part of the output contract, hence ordered_json throughout
using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json to_json(const Enclosure& e);
json to_json(const QuantizationReport& r);
json to_json(const ShiftSetCheck& c);
json to_json(const Decomposition& d);
json to_json(const NormPair& n);
json to_json(const DivergenceCertificate& c);

// top-level documents carry schema_version
json to_json(const BoundCertificate& c);
json to_json(const CounterexampleReport& r);

std::string layer_csv(const std::vector<LayerRow>& rows);

}  // namespace lpcrit
