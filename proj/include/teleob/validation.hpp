#pragma once

// Self-check suites run by `teleob validate`. Failures are report entries, not exceptions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "teleob/fuzzy.hpp"
#include "teleob/mhe.hpp"

namespace teleob {

struct SuiteResult {
  std::string name;
  bool passed = false;
  nlohmann::json details = nlohmann::json::object();
};

struct ValidationReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
  nlohmann::json to_json() const;
};

struct ValidationOptions {
  std::uint64_t seed = 1;
  int oracle_instances = 100;
  int stationarity_instances = 50;
  int iss_windows = 1000;
  /// Model for the ISS sweep; identified from default data when absent.
  std::optional<Type2FuzzyModel> model;
};

const std::vector<std::string>& suite_names();

/// selector is a suite name or "all". Unknown names throw InvalidConfiguration.
ValidationReport run_validation(const std::string& selector, const ValidationOptions& options);

SuiteResult mhe_oracle_suite(std::uint64_t seed, int instances);
SuiteResult stationarity_suite(std::uint64_t seed, int instances);
SuiteResult force_observer_suite();
SuiteResult iss_suite(const Type2FuzzyModel& model, std::uint64_t seed, int windows);
SuiteResult gains_suite();

/// Random well-posed window used by the oracle suites.
struct RandomInstance {
  MheWindow window;
  MheConfig config;
};
RandomInstance random_instance(std::uint64_t seed, int n, int horizon);

/// Minimizer of the window cost from dense normal equations over [x0; lambda],
/// with the residual Jacobian obtained by simulating unit perturbations.
Vec dense_minimizer(const MheWindow& window, const MheConfig& config);

}  // namespace teleob
