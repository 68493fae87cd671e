#pragma once

// Closed-loop master/slave simulation over a scheduled environment, with the
// per-tick trace and the run metrics derived from it.

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "teleob/fuzzy.hpp"
#include "teleob/mhe.hpp"
#include "teleob/observers.hpp"
#include "teleob/plant.hpp"
#include "teleob/teleop.hpp"

namespace teleob {

enum class ObserverKind { Proposed, Rfob, Ndob, None };
ObserverKind parse_observer(const std::string& s);
std::string to_string(ObserverKind k);

enum class SegmentKind { Free, Soft, Hard };
std::string to_string(SegmentKind k);

struct Segment {
  SegmentKind kind = SegmentKind::Free;
  double start = 0.0;
  double end = 0.0;
  // Window used for steady contact metrics; NaN when unused.
  double steady_start = NAN;
  double steady_end = NAN;
};

struct ContactParams {
  double stiffness = 0.0;
  double damping = 0.0;
};

struct ScenarioThresholds {
  double free_to_contact_ratio = 0.1;   // free mean |tau_e hat| / steady contact |tau_e hat|
  double contact_relative_error = 0.1;  // steady estimate vs true contact torque
  double baseline_ratio = 0.2;          // proposed / baseline free-motion mean
};

struct ScenarioConfig {
  std::string name = "scenario";
  double dt = 0.001;
  double duration = 25.0;
  std::uint64_t seed = 1;
  PlantModel master;
  PlantModel slave;
  Vec initial_q;
  OperatorModel op;
  std::vector<Segment> schedule;
  int wall_joint = 1;
  double wall_position = 0.8;
  ContactParams soft{30.0, 0.5};
  ContactParams hard{200.0, 1.0};
  ObserverKind observer = ObserverKind::Proposed;
  Perturbation perturb = Perturbation::None;
  std::string model_path;
  TeleopGains gains;
  DelayLaw forward;   // master -> slave, T1
  DelayLaw backward;  // slave -> master, T2
  MheConfig mhe;
  double sigma = 0.2;
  double velocity_k1 = 100.0;
  double velocity_k2 = 2.0;
  double rfob_bandwidth = 500.0;
  double ndob_gain = 20.0;
  // Feed the unbiased force estimate back into the estimator input.
  bool estimate_feedback = true;
  int metric_joint = 1;
  ScenarioThresholds thresholds;

  int n() const { return master.n; }
  long ticks() const;  // duration / dt
  void check() const;
  const Segment& segment_at(double t) const;
};

/// Relative paths inside the document resolve against base_dir.
ScenarioConfig scenario_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);

/// Everything observable about one tick.
struct TickRecord {
  long k = 0;
  double t = 0.0;
  SegmentKind segment = SegmentKind::Free;
  Vec q_m, qd_m, q_s, qd_s;          // truth
  Vec qhat_m, vhat_m, qhat_s, vhat_s;
  Vec vraw_m, vraw_s;                // velocity observer output plus noise
  Vec tau_m, tau_s, tau_h, tau_e;
  std::array<Vec, 3> obs_h, obs_e;   // observer slots 1..3 per side
  Vec tau_e_hat;                     // reported environment estimate
  Vec tau_h_hat;
  double cost_m = 0.0, cost_s = 0.0;
  double cond_m = 0.0, cond_s = 0.0;             // larger of the two normal-matrix condition numbers
  double iss_margin_m = NAN, iss_margin_s = NAN;  // NaN before the certificate is available
  long saturation_count = 0;                      // cumulative, both sides
  double delay_forward = 0.0, delay_backward = 0.0;
  bool warmup = true;
  bool saturated = false;       // uncertainty parameter clipped on either side
  bool delay_startup = false;   // delay history shorter than the delay
  int iss_evaluated = 0;
  int iss_passed = 0;
};

class TeleopSimulation {
 public:
  TeleopSimulation(const ScenarioConfig& config, const Type2FuzzyModel& model);
  ~TeleopSimulation();

  bool done() const { return k_ > config_.ticks(); }
  /// Runs one tick. Divergence surfaces as SimulationDiverged, IllConditionedModel
  /// or SingularityDetected.
  const TickRecord& step();
  const ScenarioConfig& config() const { return config_; }
  const TickRecord& last() const { return record_; }
  const MovingHorizonEstimator& estimator(bool slave) const;
  std::string state_dump() const;

 private:
  struct Side;
  ScenarioConfig config_;
  const Type2FuzzyModel& model_;
  std::unique_ptr<Side> master_, slave_;
  DelayChannel forward_, backward_;
  long k_ = 0;
  TickRecord record_;
};

struct ContactMetric {
  SegmentKind kind = SegmentKind::Hard;
  double start = 0.0, end = 0.0, steady_start = 0.0, steady_end = 0.0;
  double estimate = 0.0;  // mean reported estimate over the steady window
  double truth = 0.0;     // mean true contact torque over the steady window
  double relative_error = 0.0;
};

struct MetricsReport {
  std::string scenario;
  std::string observer;
  std::string perturb;
  std::uint64_t seed = 0;
  long rows = 0;
  bool completed = true;
  std::string failure;
  int metric_joint = 1;
  double free_mean_abs_tau_e = 0.0;
  double free_max_abs_tau_e = 0.0;
  std::vector<ContactMetric> contacts;
  double position_rmse = 0.0;       // q_m - q_s, metric joint, whole run
  double free_position_rmse = 0.0;
  double velocity_rmse_estimate = 0.0;  // slave, metric joint, after warm-up
  double velocity_rmse_raw = 0.0;
  double cost_mean = 0.0;
  double cost_max = 0.0;
  long saturation_events = 0;
  long degenerate_events = 0;
  long iss_windows = 0;
  double iss_pass_rate = 0.0;
  GainReport gains;
  ScenarioThresholds thresholds;
  nlohmann::json checks = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// Accumulates metrics tick by tick.
class MetricsCollector {
 public:
  explicit MetricsCollector(const ScenarioConfig& config);
  void add(const TickRecord& r);
  MetricsReport finish(const TeleopSimulation* sim) const;

 private:
  const ScenarioConfig& config_;
  long rows_ = 0;
  double free_sum_ = 0.0, free_max_ = 0.0;
  long free_count_ = 0;
  double pos_sq_ = 0.0, free_pos_sq_ = 0.0;
  double vel_est_sq_ = 0.0, vel_raw_sq_ = 0.0;
  long vel_count_ = 0;
  double cost_sum_ = 0.0, cost_max_ = 0.0;
  long cost_count_ = 0;
  long iss_eval_ = 0, iss_pass_ = 0;
  std::vector<double> steady_est_, steady_truth_;
  std::vector<long> steady_count_;
};

/// CSV trace with a fixed, versioned header. The second comment line echoes the gains.
class TraceWriter {
 public:
  TraceWriter(const std::filesystem::path& path, int n, const TeleopGains& gains);
  void write(const TickRecord& r);
  static std::string header(int n);
  static constexpr const char* kVersion = "teleob-trace v1";

 private:
  std::ofstream out_;
  int n_;
};

struct RunOutcome {
  MetricsReport metrics;
  bool diverged = false;
};

/// Runs the whole schedule; writes trace.csv and metrics.json into out_dir when given.
RunOutcome run_scenario(const ScenarioConfig& config, const Type2FuzzyModel& model,
                        const std::optional<std::filesystem::path>& out_dir);

}  // namespace teleob
