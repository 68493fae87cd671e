#pragma once

// JSON readers shared by the identification and scenario configurations.
// Missing keys fall back to the defaults of the corresponding struct.

#include <string>

#include <json.hpp>

#include "teleob/error.hpp"
#include "teleob/mhe.hpp"
#include "teleob/observers.hpp"
#include "teleob/plant.hpp"
#include "teleob/teleop.hpp"

namespace teleob {

/// Reads key from obj or returns fallback; type errors become ParseError.
template <typename T>
T json_or(const nlohmann::json& obj, const char* key, const T& fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

/// Vector of length n from an array, or a scalar broadcast to n entries.
Vec json_vector(const nlohmann::json& value, int n, const char* what);
/// Diagonal matrix from a list of diagonal entries or a scalar.
Mat json_diagonal(const nlohmann::json& value, int n, const char* what);

PlantModel plant_from_json(const nlohmann::json& obj);
nlohmann::json plant_to_json(const PlantModel& p);
MheConfig mhe_from_json(const nlohmann::json& obj, int n);
TeleopGains gains_from_json(const nlohmann::json& obj, int n);
nlohmann::json gains_to_json(const TeleopGains& g);
DelayLaw delay_from_json(const nlohmann::json& obj);
OperatorModel operator_from_json(const nlohmann::json& obj, int n);

Perturbation parse_perturbation(const std::string& s);
std::string to_string(Perturbation p);

nlohmann::json read_json_file(const std::string& path);

}  // namespace teleob
