#include "godisc/dataio.hpp"
#include "godisc/error.hpp"
#include "godisc/random.hpp"

namespace godisc {

LabeledDataset make_blobs(std::size_t n_samples, std::size_t n_features, std::size_t n_classes,
                          std::uint64_t seed, double cluster_std) {
  if (n_classes < 2 || n_features < 1 || n_samples < n_classes) {
    throw Error(ErrorCode::InvalidArgument, "make_blobs needs N >= C >= 2 and M >= 1");
  }
  Rng rng(seed);
  const auto m = static_cast<Eigen::Index>(n_features);
  MatrixXd centers(static_cast<Eigen::Index>(n_classes), m);
  for (Eigen::Index j = 0; j < centers.rows(); ++j) {
    for (Eigen::Index f = 0; f < m; ++f) centers(j, f) = rng.uniform(-10.0, 10.0);
  }

  RowMatrix x(static_cast<Eigen::Index>(n_samples), m);
  std::vector<int> labels(n_samples);
  const std::size_t base = n_samples / n_classes;
  const std::size_t extra = n_samples % n_classes;
  std::size_t row = 0;
  for (std::size_t j = 0; j < n_classes; ++j) {
    const std::size_t count = base + (j < extra ? 1 : 0);
    for (std::size_t k = 0; k < count; ++k, ++row) {
      labels[row] = static_cast<int>(j);
      for (Eigen::Index f = 0; f < m; ++f) {
        x(static_cast<Eigen::Index>(row), f) =
            centers(static_cast<Eigen::Index>(j), f) + cluster_std * rng.normal();
      }
    }
  }
  return make_dataset(std::move(x), std::move(labels));
}

}  // namespace godisc
