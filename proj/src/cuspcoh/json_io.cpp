#include "cuspcoh/json_io.hpp"

#include <algorithm>

namespace cuspcoh {
namespace {

Perm perm_from_map(const Json& map, const std::vector<std::string>& labels,
                   const std::string& what) {
  if (!map.is_object()) throw validation_error(what + " must be an object of label -> label");
  if (map.size() != labels.size())
    throw validation_error(what + " must map every embedding exactly once");
  std::vector<int> images(labels.size(), -1);
  auto index_of = [&](const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
      throw validation_error(what + " mentions unknown embedding '" + label + "'");
    return static_cast<int>(it - labels.begin());
  };
  for (const auto& [from, to] : map.items()) {
    if (!to.is_string()) throw validation_error(what + " values must be embedding labels");
    images[static_cast<std::size_t>(index_of(from))] = index_of(to.get<std::string>());
  }
  try {
    return Perm(std::move(images));
  } catch (const validation_error&) {
    throw validation_error(what + " must be a bijection of the embeddings");
  }
}

Int int_from_json(const Json& value, const std::string& what) {
  if (!value.is_number_integer())
    throw validation_error(what + " must be an integer, got " + value.dump());
  return value.get<Int>();
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw validation_error("input is not valid JSON");
  return parsed;
}

FieldDatum field_datum_from_json(const Json& json) {
  if (!json.is_object()) throw validation_error("field datum must be a JSON object");
  if (!json.contains("embeddings") || !json["embeddings"].is_array())
    throw validation_error("field datum needs an 'embeddings' array");
  std::vector<std::string> labels;
  for (const Json& entry : json["embeddings"]) {
    if (!entry.is_string()) throw validation_error("embedding labels must be strings");
    labels.push_back(entry.get<std::string>());
  }
  if (!json.contains("conjugation"))
    throw validation_error("field datum needs a 'conjugation' map");
  Perm conjugation = perm_from_map(json["conjugation"], labels, "conjugation");
  std::vector<Perm> generators;
  if (json.contains("galois_generators")) {
    if (!json["galois_generators"].is_array())
      throw validation_error("'galois_generators' must be an array of maps");
    int index = 0;
    for (const Json& gen : json["galois_generators"])
      generators.push_back(perm_from_map(gen, labels, "galois_generators[" + std::to_string(index++) + "]"));
  }
  return FieldDatum(std::move(labels), std::move(conjugation), std::move(generators));
}

Json field_datum_to_json(const FieldDatum& datum) {
  Json out;
  out["embeddings"] = datum.labels();
  Json conj = Json::object();
  for (int i = 0; i < datum.degree(); ++i)
    conj[datum.label(i)] = datum.label(datum.conjugation()(i));
  out["conjugation"] = std::move(conj);
  Json gens = Json::array();
  for (const Perm& g : datum.generators()) {
    Json map = Json::object();
    for (int i = 0; i < datum.degree(); ++i) map[datum.label(i)] = datum.label(g(i));
    gens.push_back(std::move(map));
  }
  out["galois_generators"] = std::move(gens);
  return out;
}

Weight weight_from_json(const Json& json) {
  if (!json.is_object()) throw validation_error("weight must be a JSON object");
  if (!json.contains("n")) throw validation_error("weight needs the rank field 'n'");
  Int n = int_from_json(json["n"], "weight rank 'n'");
  if (n < 1) throw validation_error("weight rank 'n' must be positive");
  if (!json.contains("per_embedding") || !json["per_embedding"].is_object())
    throw validation_error("weight needs a 'per_embedding' object");
  std::map<std::string, LocalWeight> components;
  for (const auto& [label, vec] : json["per_embedding"].items()) {
    if (!vec.is_array() || static_cast<Int>(vec.size()) != n)
      throw validation_error("weight at '" + label + "' must be an array of length " +
                             std::to_string(n));
    LocalWeight b;
    for (const Json& entry : vec) b.push_back(int_from_json(entry, "weight entry at '" + label + "'"));
    components.emplace(label, std::move(b));
  }
  return Weight(static_cast<int>(n), std::move(components));
}

Json weight_to_json(const Weight& weight) {
  Json out;
  out["n"] = weight.rank();
  Json per = Json::object();
  for (const auto& [label, b] : weight.per_embedding()) per[label] = b;
  out["per_embedding"] = std::move(per);
  return out;
}

Scenario scenario_from_json(const Json& json) {
  if (!json.is_object()) throw validation_error("scenario must be a JSON object");
  if (!json.contains("field")) throw validation_error("scenario needs a 'field' datum");
  if (!json.contains("weight")) throw validation_error("scenario needs a 'weight'");
  FieldDatum datum = field_datum_from_json(json["field"]);
  Weight weight = weight_from_json(json["weight"]);
  if (json.contains("n") && int_from_json(json["n"], "scenario 'n'") != weight.rank())
    throw validation_error("scenario 'n' disagrees with the weight rank");
  weight.check_compatible(datum);

  Options options;
  if (json.contains("options")) {
    const Json& opts = json["options"];
    if (!opts.is_object()) throw validation_error("'options' must be an object");
    if (opts.contains("cap")) {
      Int cap = int_from_json(opts["cap"], "options.cap");
      if (cap < 1) throw validation_error("options.cap must be positive");
      options.group_cap = cap;
      options.dim_cap = cap;
    }
    if (opts.contains("jobs")) {
      Int jobs = int_from_json(opts["jobs"], "options.jobs");
      if (jobs < 0) throw validation_error("options.jobs must be nonnegative");
      options.jobs = static_cast<int>(jobs);
    }
    if (opts.contains("report")) {
      if (!opts["report"].is_string()) throw validation_error("options.report must be a path");
      options.report_path = opts["report"].get<std::string>();
    }
  }
  return Scenario{std::move(datum), std::move(weight), std::move(options)};
}

Scenario scenario_from_string(const std::string& text) {
  return scenario_from_json(parse_json_text(text));
}

Json multiset_to_json(const CharacterMultiset& multiset) {
  Json out = Json::array();
  for (const auto& [key, mult] : multiset.entries()) {
    Json entry;
    entry["m"] = key;
    entry["mult"] = mult;
    out.push_back(std::move(entry));
  }
  return out;
}

Json blocks_to_json(const FieldDatum& datum, const std::vector<std::vector<int>>& blocks) {
  Json out = Json::array();
  for (const std::vector<int>& block : blocks) {
    Json labels = Json::array();
    for (int member : block) labels.push_back(datum.label(member));
    out.push_back(std::move(labels));
  }
  return out;
}

}  // namespace cuspcoh
