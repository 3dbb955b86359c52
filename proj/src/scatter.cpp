#include "godisc/scatter.hpp"

#include <cmath>
#include <span>
#include <string>

#include "godisc/error.hpp"
#include "godisc/kernels.hpp"

namespace godisc {

ScatterStats compute_stats(const LabeledDataset& data, double delta) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::InvalidArgument, "delta must be finite and >= 0");
  }
  const std::size_t n = data.n_samples();
  const std::size_t m = data.n_features();
  const std::size_t c = data.n_classes();
  const auto& kern = kernels::active_kernels();

  ScatterStats s;
  s.delta = delta;
  s.class_counts.assign(c, 0);

  // Row-major accumulators so each sample is one contiguous kernel call.
  RowMatrix sums = RowMatrix::Zero(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(data.labels[i]);
    kern.axpy(1.0, data.features.row(static_cast<Eigen::Index>(i)).data(),
              sums.row(static_cast<Eigen::Index>(j)).data(), m);
    ++s.class_counts[j];
  }
  s.overall_mean = sums.colwise().sum().transpose() / static_cast<double>(n);
  s.class_means.resize(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(m));
  for (std::size_t j = 0; j < c; ++j) {
    s.class_means.row(static_cast<Eigen::Index>(j)) =
        sums.row(static_cast<Eigen::Index>(j)) / static_cast<double>(s.class_counts[j]);
  }

  // Within-class scatter: upper triangle via rank-1 kernel, samples in file order.
  RowMatrix upper = RowMatrix::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  RowMatrix centered_means = s.class_means;
  std::vector<double> dev(m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = data.features.row(static_cast<Eigen::Index>(i));
    const auto mean = centered_means.row(data.labels[i]);
    for (std::size_t f = 0; f < m; ++f) {
      dev[f] = row(static_cast<Eigen::Index>(f)) - mean(static_cast<Eigen::Index>(f));
    }
    kern.rank1_upper(dev.data(), upper.data(), m);
  }
  s.within = upper.triangularView<Eigen::Upper>();
  s.within.triangularView<Eigen::StrictlyLower>() = s.within.transpose();

  s.between = MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t j = 0; j < c; ++j) {
    const VectorXd d = s.class_means.row(static_cast<Eigen::Index>(j)).transpose() - s.overall_mean;
    s.between.selfadjointView<Eigen::Upper>().rankUpdate(d);
  }
  s.between.triangularView<Eigen::StrictlyLower>() = s.between.transpose();

  s.within_reg = s.within;
  s.within_reg.diagonal().array() += delta;
  s.within_chol.compute(s.within_reg);
  if (s.within_chol.info() != Eigen::Success || !(s.within_chol.rcond() > 1e-15)) {
    throw Error(ErrorCode::SingularWithinScatter,
                "S_W + delta*I is not positive definite (delta = " + std::to_string(delta) + ")");
  }
  s.within_inv = s.within_chol.solve(MatrixXd::Identity(static_cast<Eigen::Index>(m),
                                                        static_cast<Eigen::Index>(m)));
  s.within_inv = 0.5 * (s.within_inv + s.within_inv.transpose()).eval();
  return s;
}

VectorXd binary_mean_difference(const ScatterStats& stats) {
  if (stats.n_classes() != 2) {
    throw Error(ErrorCode::NotBinary,
                "binary mean difference needs 2 classes, got " + std::to_string(stats.n_classes()));
  }
  return (stats.class_means.row(0) - stats.class_means.row(1)).transpose();
}

double fisher_ratio(const VectorXd& v, const ScatterStats& stats) {
  if (v.size() != stats.between.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "direction length " + std::to_string(v.size()) +
                                              " does not match " + std::to_string(stats.between.rows()) +
                                              " features");
  }
  if (v.squaredNorm() == 0.0) throw Error(ErrorCode::ZeroVector, "Fisher ratio of the zero vector");
  const VectorXd u = v / v.norm();
  return u.dot(stats.between * u) / u.dot(stats.within_reg * u);
}

}  // namespace godisc
