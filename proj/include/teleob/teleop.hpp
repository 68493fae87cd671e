#pragma once

// Four-channel bilateral control over delayed links: gains and their validity
// conditions, the delay channels and the two control laws.

#include <array>
#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <vector>

#include "teleob/fuzzy.hpp"
#include "teleob/types.hpp"

namespace teleob {

struct TeleopGains {
  Mat K_m, K_s, B_m, B_s, K_h, K_e;
  std::array<Mat, 3> aleph_h;  // master observer bank
  std::array<Mat, 3> aleph_e;  // slave observer bank
  double T1_max = 0.0;         // master -> slave
  double T2_max = 0.0;         // slave -> master

  /// Gains of the haptic testbed, with aleph chosen to satisfy the convergence conditions.
  static TeleopGains testbed_defaults(int n);
  void check(int n) const;
};

struct GainViolation {
  std::string name;
  double margin = 0.0;  // negative amount by which the condition fails
  std::string detail;
};

struct GainReport {
  bool satisfied = true;
  std::vector<GainViolation> violations;
  Mat required_aleph_h1;
  Mat required_aleph_e3;
};

/// Checks B >= (T1max + T2max) I on both sides and the observer gain assignments.
GainReport validate_gains(const TeleopGains& gains, double tolerance = 1e-12);

struct DelayLaw {
  double base = 0.0;       // s
  double variation = 0.0;  // s, half width
  double correlation_time = 0.5;  // s, of the variation process
};

struct DelaySample {
  Vec value;
  double delay = 0.0;
  bool saturated = false;  // history too short, oldest sample returned
};

/// Transport delay base + variation * clip(x, -1, 1), x a unit-variance
/// Ornstein-Uhlenbeck process, applied to a linearly interpolated history.
class DelayChannel {
 public:
  DelayChannel(int n, DelayLaw law, double t_max, double dt, std::uint64_t seed);

  /// Appends the value sent at time t and draws the delay for this tick.
  void push(double t, const Vec& value);
  /// Value received at time t (the last pushed time).
  DelaySample sample(double t) const;
  double current_delay() const { return delay_; }
  double bound() const { return t_max_; }

 private:
  int n_;
  DelayLaw law_;
  double t_max_;
  double dt_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  double ou_ = 0.0;
  double delay_ = 0.0;
  std::deque<std::pair<double, Vec>> history_;
};

/// Signals entering one side's control law.
struct ControlInputs {
  Vec q_hat;
  Vec v_hat;
  Vec q_remote;      // delayed position of the other side
  Vec tau_local;     // tau*_h1 (master) or tau*_e3 (slave)
  Vec tau_remote;    // delayed tau*_e1 (master) or tau*_h3 (slave)
  Vec tau_cancel;    // tau*_h2 (master) or tau*_e2 (slave)
  BlendedDynamics model;
  Vec dF_lambda;
};

/// K (q_remote - q) - B v + K_f (tau_local + tau_remote) + C v + D q + F + dFlambda - tau_cancel.
Vec four_channel_control(const Mat& K, const Mat& B, const Mat& K_f, const ControlInputs& in);
Vec master_control(const TeleopGains& gains, const ControlInputs& in);
Vec slave_control(const TeleopGains& gains, const ControlInputs& in);

}  // namespace teleob
