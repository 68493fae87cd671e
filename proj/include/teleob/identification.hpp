#pragma once

// Excitation experiments on the simulated arm and the end-to-end fuzzy model
// identification built on them.

#include <cstdint>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "teleob/fuzzy.hpp"
#include "teleob/plant.hpp"

namespace teleob {

/// Reference = center + multisine, tracked by gravity feedforward plus PD on the
/// observed signals, with a small multisine torque dither on top.
struct ExcitationConfig {
  Vec center;
  Vec amplitude;      // rad, peak of the reference multisine
  double f_min = 0.05;  // Hz
  double f_max = 0.6;   // Hz
  int components = 6;
  Vec kp;
  Vec kd;
  double dither = 0.05;        // N m, peak of the torque dither
  double dither_f_max = 8.0;   // Hz
};

struct IdentConfig {
  PlantModel plant;
  double dt = 0.001;
  int count = 30409;
  std::uint64_t seed = 1;
  ExcitationConfig excitation;
  double velocity_k1 = 100.0;
  double velocity_k2 = 2.0;
  int rules = 9;
  double mu_blur = 0.05;
  double coverage = 0.9;
  double holdout_fraction = 0.2;
  GkOptions gk;
  LocalFitOptions fit;

  static IdentConfig defaults();
  void check() const;
};

IdentConfig ident_config_from_json(const nlohmann::json& obj);

/// count samples [v(k+1); v(k); q(k)] -> tau(k); v comes from the velocity observer.
/// Plant divergence is reported as ExcitationFailure.
std::vector<Sample> generate_ident_data(const IdentConfig& config, std::uint64_t seed);

void write_samples_csv(const std::vector<Sample>& samples, const std::filesystem::path& path);
std::vector<Sample> read_samples_csv(const std::filesystem::path& path);

struct IdentReport {
  int train_count = 0;
  int test_count = 0;
  int rules = 0;
  int iterations = 0;
  bool converged = false;
  Vec delta_y;          // per output, applied to every rule
  Vec coverage;         // fraction of training residuals inside [-delta_y, delta_y]
  Vec heldout_rmse;     // per output
  Vec heldout_signal_rms;
  double heldout_rmse_ratio = 0.0;  // |rmse| / |signal rms| over all outputs
  nlohmann::json to_json() const;
};

struct IdentResult {
  Type2FuzzyModel model;
  IdentReport report;
};

/// Nearest-rank percentile of a set of nonnegative values, p in (0, 1].
double nearest_rank_percentile(std::vector<double> values, double p);

/// Clustering, weighted fits, interval calibration and held-out evaluation.
/// The last holdout_fraction of the samples is held out.
IdentResult identify(const std::vector<Sample>& samples, const IdentConfig& config, std::uint64_t seed);

}  // namespace teleob
