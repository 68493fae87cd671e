#pragma once

#include <Eigen/Dense>

namespace teleob {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// 2-norm condition number; infinity for singular input.
double condition_number(const Mat& a);

bool all_finite(const Mat& a);

}  // namespace teleob
