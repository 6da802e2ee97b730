#pragma once

// JSON (de)serialization for discrete laws. Schema:
//   {"atoms": [[value, weight], ...]}
// Weights must sum to 1 within the construction tolerance.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sharpchf/distributions.hpp"

namespace sharpchf {

inline std::string law_to_json(const DiscreteDistribution& dist) {
  nlohmann::ordered_json j;
  j["atoms"] = nlohmann::ordered_json::array();
  for (const Atom& a : dist.atoms())
    j["atoms"].push_back({a.value, a.weight});
  return j.dump();
}

inline DiscreteDistribution law_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed law JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
    throw std::invalid_argument("law JSON must be {\"atoms\": [[v, w], ...]}");
  std::vector<Atom> atoms;
  for (const auto& pair : j["atoms"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      throw std::invalid_argument("each atom must be a [value, weight] pair");
    atoms.push_back({pair[0].get<double>(), pair[1].get<double>()});
  }
  return DiscreteDistribution(std::move(atoms));
}

}  // namespace sharpchf
