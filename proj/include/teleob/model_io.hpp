#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "teleob/fuzzy.hpp"

namespace teleob {

// Model file layout:
//   {"n": 2, "L": 9, "dt": 0.001,
//    "centers": [[...3n numbers...], ...],
//    "rules": [{"M": [[..],[..]], "C": ..., "D": ..., "F_lower": [..], "F_upper": [..],
//               "mu_blur": 0.05}, ...]}
// Matrices are row-major arrays of rows. Numbers are written in shortest
// round-trip form, so a load/save cycle reproduces decimal inputs exactly.

nlohmann::json model_to_json(const Type2FuzzyModel& model);
Type2FuzzyModel model_from_json(const nlohmann::json& doc);

void save_model(const Type2FuzzyModel& model, const std::filesystem::path& path);
Type2FuzzyModel load_model(const std::filesystem::path& path);

nlohmann::json matrix_to_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& rows);
nlohmann::json vector_to_json(const Vec& v);
Vec vector_from_json(const nlohmann::json& arr);

}  // namespace teleob
