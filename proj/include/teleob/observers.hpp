#pragma once

// Velocity observer, model-based force observer bank and the two baseline
// external-torque estimators (RFOB, NDOB).

#include <array>

#include "teleob/fuzzy.hpp"
#include "teleob/plant.hpp"
#include "teleob/types.hpp"

namespace teleob {

/// Second-order tracking filter on the encoder signal:
///   vdot = (k1 + k2)(q - v) + k1 k2 z,  zdot = q - v.
/// The state v follows q; its rate vdot is the velocity estimate.
class VelocityObserver {
 public:
  VelocityObserver(int n, double k1, double k2);

  /// Sets v = q0, z = 0 (equilibrium for a motionless arm).
  void reset(const Vec& q0);
  /// Steady ramp-tracking state for an arm already moving at v0.
  void reset(const Vec& q0, const Vec& v0);
  /// Euler step with the new measurement; returns the state v.
  const Vec& step(const Vec& q, double dt);

  const Vec& state() const { return v_; }
  const Vec& integral() const { return z_; }
  /// Velocity estimate produced by the last step.
  const Vec& rate() const { return rate_; }
  double k1() const { return k1_; }
  double k2() const { return k2_; }
  /// Lyapunov function (q - v)'(q - v) + k1 k2 z'z.
  double lyapunov(const Vec& q) const;

 private:
  double k1_, k2_;
  Vec v_, z_, rate_;
};

/// Force observer driven by the blended model:
///   tau* = Z + sigma vhat,  Zdot = -Y(Z + tau - C vhat - D qhat - F - dFlambda + sigma vhat) + aleph vhat,
/// with Y = sigma M^-1.  Its estimate obeys d(tau*)/dt = Y(tau_e - tau*) + aleph vhat.
class ForceObserver {
 public:
  ForceObserver(int n, double sigma, Mat aleph);

  /// Z = -sigma vhat so that the output starts at zero.
  void reset(const Vec& v_hat);
  Vec output(const Vec& v_hat) const;
  /// Integrates Z over one step using the torque applied during that step.
  void advance(const Vec& q_hat, const Vec& v_hat, const Vec& tau, const BlendedDynamics& bd,
               const Vec& dF_lambda, double dt);
  /// output() followed by advance(); returns the output.
  Vec step(const Vec& q_hat, const Vec& v_hat, const Vec& tau, const BlendedDynamics& bd,
           const Vec& dF_lambda, double dt);

  const Vec& internal() const { return z_; }
  double sigma() const { return sigma_; }
  const Mat& aleph() const { return aleph_; }

 private:
  double sigma_;
  Mat aleph_;
  Vec z_;
};

/// Three observers per side that differ only in the aleph gain.
class ObserverBank {
 public:
  ObserverBank(int n, double sigma, const std::array<Mat, 3>& alephs);

  void reset(const Vec& v_hat);
  std::array<Vec, 3> outputs(const Vec& v_hat) const;
  void advance(const Vec& q_hat, const Vec& v_hat, const Vec& tau, const BlendedDynamics& bd,
               const Vec& dF_lambda, double dt);
  const ForceObserver& operator[](int i) const { return obs_[i]; }

 private:
  std::array<ForceObserver, 3> obs_;
};

/// Reaction force observer with constant diagonal nominal inertia:
///   f' = g (tau + g Jn v - f),  tau* = g Jn v - f.
class Rfob {
 public:
  Rfob(Vec nominal_inertia, double bandwidth);

  void reset(const Vec& v);
  Vec output(const Vec& v) const;
  void advance(const Vec& v, const Vec& tau, double dt);
  Vec step(const Vec& v, const Vec& tau, double dt);
  double bandwidth() const { return g_; }

 private:
  Vec jn_;
  double g_;
  Vec f_;
};

enum class Perturbation { None, DropGravity, MassX2 };

/// Nominal rigid-body model handed to the NDOB, optionally perturbed.
struct NominalModel {
  PlantModel plant;
  Perturbation perturbation = Perturbation::None;

  Mat mass(const Vec& q) const;
  Vec coriolis(const Vec& q, const Vec& v) const;
  Vec gravity(const Vec& q) const;
};

/// Nonlinear disturbance observer:
///   dhat = z + L M(q) v,  zdot = -L dhat + L (h(q, v) + g(q) - tau).
class Ndob {
 public:
  Ndob(NominalModel nominal, Mat gain, double condition_cap = 1e8);

  void reset(const Vec& q, const Vec& v);
  /// Throws SingularityDetected when the nominal inertia is singular at q.
  Vec output(const Vec& q, const Vec& v) const;
  void advance(const Vec& q, const Vec& v, const Vec& tau, double dt);
  Vec step(const Vec& q, const Vec& v, const Vec& tau, double dt);
  const NominalModel& nominal() const { return nominal_; }

 private:
  Mat checked_mass(const Vec& q) const;

  NominalModel nominal_;
  Mat L_;
  double condition_cap_;
  Vec z_;
};

}  // namespace teleob
