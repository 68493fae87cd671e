#pragma once

// Ground-truth planar serial arm with gravity, friction and disturbances,
// plus the contact and scripted-operator models that close the loop around it.

#include <cstdint>
#include <random>
#include <vector>

#include "teleob/types.hpp"

namespace teleob {

/// Planar n-link arm moving in a vertical plane, point masses at the link tips.
/// Joint angles are relative; q = 0 puts every link along the horizontal.
struct PlantModel {
  int n = 2;
  Vec masses;
  Vec lengths;
  double gravity = 9.81;
  Vec viscous;  // f_v, N m s / rad
  Vec coulomb;  // f_c, N m
  double coulomb_band = 0.01;  // rad/s, tanh smoothing scale
  double disturbance_amplitude = 0.0;  // stationary std of F^d, N m
  double disturbance_bandwidth = 5.0;  // rad/s
  double position_noise = 0.0;  // rad
  double velocity_noise = 0.0;  // rad/s, added on the velocity-observer output
  double joint_limit = 3.0;     // rad, |q| beyond this counts as divergence

  /// Default two-link arm used by the experiments.
  static PlantModel two_link();
  void check() const;
};

struct PlantState {
  Vec q;
  Vec qdot;
  double t = 0.0;
};

Mat mass_matrix(const PlantModel& model, const Vec& q);
/// Coriolis and centrifugal torque C(q, qdot) qdot.
Vec coriolis_torque(const PlantModel& model, const Vec& q, const Vec& qdot);
Vec gravity_torque(const PlantModel& model, const Vec& q);
Vec friction_torque(const PlantModel& model, const Vec& qdot);
double kinetic_energy(const PlantModel& model, const PlantState& s);
/// Potential energy with the base height as reference.
double potential_energy(const PlantModel& model, const Vec& q);

/// Semi-implicit Euler step of M qdd + C qdot + g + f qdot + f_c = tau + tau_ext.
PlantState step_dynamics(const PlantModel& model, const PlantState& state, const Vec& tau,
                         const Vec& tau_ext, double dt);

enum class EnvironmentKind { Free, Wall };

/// Joint-space spring-damper walls. A NaN wall position leaves that joint free.
struct Environment {
  EnvironmentKind kind = EnvironmentKind::Free;
  Vec wall_position;
  double stiffness = 0.0;
  double damping = 0.0;
};

/// Torque the environment applies to the arm; walls push back, never pull.
Vec contact_torque(const Environment& env, const Vec& q, const Vec& qdot);

struct Waypoint {
  double t = 0.0;
  Vec q;
};

/// Scripted human: PD pull towards a cubic-interpolated trajectory, saturated.
struct OperatorModel {
  std::vector<Waypoint> waypoints;
  Vec kp;
  Vec kd;
  double tau_max = 1.0;

  Vec desired(double t) const;
};

Vec operator_torque(const OperatorModel& op, double t, const Vec& q, const Vec& qdot);

/// Stateful plant instance: true state, disturbance process and sensor noise.
class PlantSimulator {
 public:
  PlantSimulator(PlantModel model, PlantState initial, double dt, std::uint64_t seed);

  const PlantModel& model() const { return model_; }
  const PlantState& state() const { return state_; }
  const Vec& disturbance() const { return disturbance_; }

  /// Encoder reading with additive white noise.
  Vec measure_position();
  /// White noise sample for the velocity-observer output path.
  Vec velocity_noise();
  void step(const Vec& tau, const Vec& tau_ext);

 private:
  PlantModel model_;
  PlantState state_;
  double dt_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  Vec disturbance_;
};

}  // namespace teleob
