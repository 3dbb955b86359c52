#pragma once

#include <vector>

#include "godisc/dataio.hpp"
#include "godisc/types.hpp"

namespace godisc {

/// Class statistics and scatter matrices shared by every subspace method.
///
/// `between` is the unweighted sum over classes of (mean_j - mean)(mean_j - mean)^T
/// and `within` the summed per-class scatter. All Fisher ratios use
/// `within_reg` = within + delta * I, and `within_inv` is its inverse, formed
/// once from the Cholesky factor kept in `within_chol`.
struct ScatterStats {
  MatrixXd class_means;  // C x M
  VectorXd overall_mean;
  std::vector<std::size_t> class_counts;
  MatrixXd between;
  MatrixXd within;
  MatrixXd within_reg;
  MatrixXd within_inv;
  Eigen::LLT<MatrixXd> within_chol;
  double delta = kDefaultDelta;

  std::size_t n_features() const noexcept { return static_cast<std::size_t>(between.rows()); }
  std::size_t n_classes() const noexcept { return class_counts.size(); }
};

ScatterStats compute_stats(const LabeledDataset& data, double delta = kDefaultDelta);

/// mean of class 0 minus mean of class 1; throws NotBinary unless C == 2.
VectorXd binary_mean_difference(const ScatterStats& stats);

/// (v' S_B v) / (v' S_W_reg v); throws ZeroVector for v == 0.
double fisher_ratio(const VectorXd& v, const ScatterStats& stats);

}  // namespace godisc
