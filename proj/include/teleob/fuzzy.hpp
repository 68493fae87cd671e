#pragma once

// Interval Type-2 Takagi-Sugeno fuzzy identification and inference.
//
// Identification runs in three stages: Gustafson-Kessel clustering of the
// joint input/output samples, one weighted least-squares fit per rule with
// the crisp cluster memberships as weights, and blurring of memberships and
// output offsets into intervals. Inference evaluates inverse-distance
// memberships against the premise part of the cluster centers and blends
// the rule matrices with the lower and upper membership bounds.

#include <cstdint>
#include <span>
#include <vector>

#include "teleob/types.hpp"

namespace teleob {

struct Sample {
  Vec x;  // premise vector
  Vec y;  // output vector
};

struct ClusterSet {
  int rules = 0;
  std::vector<Vec> centers;  // each of dimension dim(x) + dim(y)
  Mat memberships;           // samples x rules, rows sum to one
  int iterations = 0;
  bool converged = false;
};

struct GkOptions {
  double fuzziness = 2.0;
  double cluster_volume = 1.0;
  double covariance_regularization = 1e-8;  // times trace(F) added to the diagonal
  double tolerance = 1e-6;                  // max center shift
  int max_iterations = 200;
};

/// Gustafson-Kessel fuzzy clustering with k-means++ seeding.
ClusterSet gk_cluster(std::span<const Sample> samples, int rules, std::uint64_t seed,
                      const GkOptions& opts = {});

/// One affine consequent y = A x + f.
struct LocalLinearModel {
  Mat coefficients;  // p x q
  Vec offset;        // p
  double weighted_rms_residual = 0.0;
};

struct LocalFitOptions {
  double ridge = 1e-9;
  /// Gram matrices whose smallest/largest eigenvalue ratio falls below this are rank deficient.
  double rank_tolerance = 1e-12;
};

/// Weighted least squares per rule, weights = crisp memberships.
std::vector<LocalLinearModel> fit_local_models(std::span<const Sample> samples,
                                               const ClusterSet& clusters,
                                               const LocalFitOptions& opts = {});

/// Rule consequent in robot form: M (v(k+1)-v(k))/dt + C v(k) + D q(k) + F = tau(k).
struct RobotRule {
  Mat M, C, D;
  Vec F_lower, F_upper;
  double mu_blur = 0.0;
};

/// Crisp rules before blurring.
struct CrispRobotModel {
  int n = 0;
  double dt = 0.0;
  std::vector<Vec> centers;  // premise part, dimension 3n
  std::vector<Mat> M, C, D;
  std::vector<Vec> f;
};

/// Maps affine fits over the premise [v(k+1); v(k); q(k)] onto robot-form rules.
CrispRobotModel to_robot_form(std::span<const LocalLinearModel> fits, const ClusterSet& clusters,
                              int n, double dt);

struct Type2FuzzyModel {
  int n = 0;
  double dt = 0.0;
  std::vector<Vec> centers;
  std::vector<RobotRule> rules;

  int rule_count() const { return static_cast<int>(rules.size()); }
  int premise_dim() const { return 3 * n; }
  /// Throws InvalidConfiguration when an invariant is broken.
  void check() const;
};

/// Attaches membership and output blurs. output_blur[l](i) >= 0, mu_blur[l] in [0, 1].
Type2FuzzyModel blur_model(const CrispRobotModel& crisp, std::span<const double> mu_blur,
                           std::span<const Vec> output_blur);

struct IntervalMembershipVector {
  Vec lower, crisp, upper;
};

/// Crisp memberships from squared Euclidean distances to the centers, then blurred.
IntervalMembershipVector infer_membership(const Type2FuzzyModel& model, const Vec& x);

/// Crisp membership evaluation on bare centers (shared with identification reporting).
Vec crisp_membership(std::span<const Vec> centers, const Vec& x);

struct BlendedDynamics {
  Mat M, C, D;
  Vec F;   // interval midpoints
  Vec dF;  // interval half widths, nonnegative
};

struct BlendOptions {
  double zero_sum_threshold = 1e-12;
  double condition_cap = 1e8;
};

BlendedDynamics blend(const Type2FuzzyModel& model, const Vec& x, const BlendOptions& opts = {});

/// Online premise: v(k) stands in for the unavailable v(k+1).
Vec online_premise(const Vec& q, const Vec& v);

/// One-step torque prediction of the blended model at premise [v_next; v; q].
Vec predict_torque(const Type2FuzzyModel& model, const Vec& premise);

}  // namespace teleob
