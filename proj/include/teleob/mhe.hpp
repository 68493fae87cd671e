#pragma once

// Moving horizon estimation over the fuzzy LTV model.
//
// Each step solves, in closed form, the unconstrained quadratic
//
//   J = |X(k-N) - Xbar|^2_Px + sum |lambda(i)|^2_Plambda + sum |y(i) - yhat(i)|^2_Py
//
// over the oldest state of the window and the per-step uncertainty parameters,
// then rolls the model forward to obtain the current clean state.

#include <deque>
#include <optional>
#include <vector>

#include "teleob/ltv.hpp"
#include "teleob/types.hpp"

namespace teleob {

struct MheConfig {
  int horizon = 10;
  Mat P_x;       // 2n x 2n, positive definite
  Mat P_lambda;  // n x n
  Mat P_y;       // 2n x 2n
  double condition_cap = 1e10;

  /// N = 10 with the diagonal weights used on the haptic testbed, truncated to n joints.
  static MheConfig testbed_defaults(int n);
  void check(int n) const;
};

/// Data of one horizon: y(k-N..k), u(k-N..k-1), models at k-N..k, and the arrival prior.
struct MheWindow {
  std::vector<Vec> y;
  std::vector<Vec> u;
  std::vector<LtvMatrices> ltv;
  Vec prior;

  int horizon() const { return static_cast<int>(u.size()); }
  void check() const;
};

struct StackedSystem {
  Mat Phi;  // (N+1)2n x 2n
  Mat G;    // (N+1)2n x Nn
  Mat H;    // (N+1)2n x Nn
  Mat P_lambda_bar;
  Mat P_y_bar;
  Vec y_stack;
  Vec u_stack;
};

StackedSystem build_stacks(const MheWindow& window, const MheConfig& config);

struct MheSolution {
  Vec x0;      // X(k-N|k)
  Vec lambda;  // stacked lambda(k-N..k-1 | k)
  double cost = 0.0;
  double cond_lambda = 1.0;
  double cond_state = 1.0;
  double stationarity_residual = 0.0;
  Mat state_normal;  // P_x + Phi' Py Phi - Theta Phi
  Mat output_gain;   // Phi' Py - Theta
};

/// Throws EstimatorDegenerate when either normal matrix exceeds the condition cap.
MheSolution solve(const MheWindow& window, const StackedSystem& stacks, const MheConfig& config);

std::vector<Vec> rollout(const MheSolution& solution, const MheWindow& window);

/// Cost recomputed from a rolled-out trajectory.
double window_cost(const MheWindow& window, const MheConfig& config, const std::vector<Vec>& states,
                   const Vec& lambda);

struct IssCertificate {
  bool holds = false;
  double margin = 0.0;  // smallest eigenvalue of P_x - Q_x - Psi'(P_x + I)Psi
  Mat psi;
};

/// a_before is the transition matrix just ahead of the window.
IssCertificate iss_check(const MheSolution& solution, const Mat& a_before, const MheConfig& config,
                         const Mat& q_x);

struct MheEstimate {
  Vec q;
  Vec v;
  Vec dF_lambda;  // dF(k) * saturated lambda(k-1|k)
  bool warmup = true;
  bool degenerate = false;
  bool saturated = false;
  double cost = 0.0;
};

class MovingHorizonEstimator {
 public:
  MovingHorizonEstimator(int n, MheConfig config);

  /// Pushes y(k), the torque applied over [k-1, k) and the model at k, then re-solves.
  MheEstimate advance(const Vec& y, const Vec& torque_prev, const LtvMatrices& ltv);

  const MheConfig& config() const { return config_; }
  int dimension() const { return n_; }
  long saturation_events() const { return saturation_events_; }
  long degenerate_events() const { return degenerate_events_; }
  const std::optional<MheSolution>& last_solution() const { return last_solution_; }
  const std::vector<Vec>& last_rollout() const { return last_rollout_; }
  /// Window used by the last solve; empty during warm-up.
  const std::optional<MheWindow>& last_window() const { return last_window_; }
  /// Certificate for the last window; nullopt until a transition ahead of the window exists.
  std::optional<IssCertificate> iss_certificate(const Mat& q_x) const;

 private:
  struct Entry {
    Vec y;
    LtvMatrices ltv;
    Vec u;
  };

  int n_;
  MheConfig config_;
  std::deque<Entry> history_;
  std::optional<MheWindow> last_window_;
  std::optional<MheSolution> last_solution_;
  std::vector<Vec> last_rollout_;
  std::optional<Mat> a_before_;
  long saturation_events_ = 0;
  long degenerate_events_ = 0;
};

}  // namespace teleob
