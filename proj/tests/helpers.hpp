#pragma once

#include <string>

#include "godisc/dataio.hpp"
#include "godisc/scatter.hpp"

namespace testutil {

inline std::string data_path(const std::string& file) { return std::string(GODISC_TEST_DATA_DIR) + "/" + file; }

inline godisc::Registry registry() { return godisc::Registry::load(data_path("registry.txt")); }

inline godisc::LabeledDataset load(const std::string& name) { return godisc::load_csv(registry().lookup(name)); }

// ScatterStats assembled from given matrices, for tests that need a specific
// S_B / S_W pair rather than one derived from data.
inline godisc::ScatterStats stats_from(const godisc::MatrixXd& between, const godisc::MatrixXd& within,
                                       double delta = 0.0, std::size_t n_classes = 2) {
  godisc::ScatterStats s;
  const auto m = between.rows();
  s.between = between;
  s.within = within;
  s.delta = delta;
  s.within_reg = within + delta * godisc::MatrixXd::Identity(m, m);
  s.within_chol.compute(s.within_reg);
  s.within_inv = s.within_chol.solve(godisc::MatrixXd::Identity(m, m));
  s.within_inv = 0.5 * (s.within_inv + s.within_inv.transpose()).eval();
  s.class_counts.assign(n_classes, 1);
  s.class_means = godisc::MatrixXd::Zero(static_cast<Eigen::Index>(n_classes), m);
  s.overall_mean = godisc::VectorXd::Zero(m);
  return s;
}

}  // namespace testutil
