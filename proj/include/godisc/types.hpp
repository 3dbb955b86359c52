#pragma once

#include <Eigen/Dense>

namespace godisc {

// Sample matrices keep one observation per contiguous row so the kernels in
// kernels.hpp can stream over samples.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Eigen::MatrixXd;
using Eigen::VectorXd;

inline constexpr double kDefaultDelta = 5e-3;

}  // namespace godisc
