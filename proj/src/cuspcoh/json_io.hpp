#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "cuspcoh/branching.hpp"
#include "cuspcoh/field_datum.hpp"
#include "cuspcoh/weights.hpp"

namespace cuspcoh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "cuspcoh 1.0.0";

// {"embeddings": [labels], "conjugation": {label: label},
//  "galois_generators": [{label: label}]}
FieldDatum field_datum_from_json(const Json& json);
Json field_datum_to_json(const FieldDatum& datum);

// {"n": int, "per_embedding": {label: [b_1, ..., b_n]}}; integers only.
Weight weight_from_json(const Json& json);
Json weight_to_json(const Weight& weight);

struct Options {
  Int group_cap = FieldDatum::kDefaultGroupCap;
  Int dim_cap = kDefaultDimCap;
  int jobs = 0;  // 0 = available cores
  std::optional<std::string> report_path;
};

struct Scenario {
  FieldDatum datum;
  Weight weight;
  Options options;
};

// {"field": {...}, "n": int, "weight": {...}, "options": {...}?}
Scenario scenario_from_json(const Json& json);
Scenario scenario_from_string(const std::string& text);

Json multiset_to_json(const CharacterMultiset& multiset);
Json blocks_to_json(const FieldDatum& datum, const std::vector<std::vector<int>>& blocks);

Json parse_json_text(const std::string& text);  // validation_error on bad syntax

}  // namespace cuspcoh
