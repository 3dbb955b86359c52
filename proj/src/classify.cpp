#include "godisc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "godisc/error.hpp"
#include "godisc/kernels.hpp"

namespace godisc {
namespace {

constexpr double kLogTwoPi = 1.8378770664093453;

// Full symmetric scatter of the rows of X about `center`.
MatrixXd scatter_about(const RowMatrix& X, const std::vector<std::size_t>& rows, const VectorXd& center) {
  const auto k = X.cols();
  RowMatrix upper = RowMatrix::Zero(k, k);
  std::vector<double> dev(static_cast<std::size_t>(k));
  const auto& kern = kernels::active_kernels();
  for (std::size_t r : rows) {
    for (Eigen::Index f = 0; f < k; ++f) {
      dev[static_cast<std::size_t>(f)] = X(static_cast<Eigen::Index>(r), f) - center(f);
    }
    kern.rank1_upper(dev.data(), upper.data(), static_cast<std::size_t>(k));
  }
  MatrixXd full = upper.triangularView<Eigen::Upper>();
  full.triangularView<Eigen::StrictlyLower>() = full.transpose();
  return full;
}

}  // namespace

std::string_view classifier_name(ClassifierKind kind) noexcept {
  switch (kind) {
    case ClassifierKind::KNN: return "knn";
    case ClassifierKind::GaussianLinear: return "linear";
    case ClassifierKind::GaussianQuadratic: return "quadratic";
  }
  return "unknown";
}

ClassifierKind parse_classifier(std::string_view name) {
  if (name == "knn" || name == "1nn" || name == "nn") return ClassifierKind::KNN;
  if (name == "linear") return ClassifierKind::GaussianLinear;
  if (name == "quadratic") return ClassifierKind::GaussianQuadratic;
  throw Error(ErrorCode::InvalidArgument, "unknown classifier '" + std::string(name) + "'");
}

ClassifierModel fit_classifier(ClassifierKind kind, const RowMatrix& X, const std::vector<int>& labels,
                               std::size_t n_classes, const ClassifierOptions& options) {
  const std::size_t n = static_cast<std::size_t>(X.rows());
  const auto dim = X.cols();
  if (labels.size() != n) throw Error(ErrorCode::ShapeMismatch, "label count does not match rows");
  if (dim < 1) throw Error(ErrorCode::ShapeMismatch, "empty subspace");
  if (options.k_neighbors < 1) throw Error(ErrorCode::InvalidArgument, "k_neighbors must be >= 1");

  std::vector<std::vector<std::size_t>> members(n_classes);
  for (std::size_t i = 0; i < n; ++i) {
    const int l = labels[i];
    if (l < 0 || static_cast<std::size_t>(l) >= n_classes) {
      throw Error(ErrorCode::InvalidArgument, "label " + std::to_string(l) + " out of range");
    }
    members[static_cast<std::size_t>(l)].push_back(i);
  }
  for (std::size_t j = 0; j < n_classes; ++j) {
    if (members[j].empty()) {
      throw Error(ErrorCode::EmptyClass, "class " + std::to_string(j) + " has no training samples");
    }
  }

  ClassifierModel model;
  model.kind = kind;
  model.k_neighbors = options.k_neighbors;
  model.n_classes = n_classes;
  model.class_means.resize(static_cast<Eigen::Index>(n_classes), dim);
  for (std::size_t j = 0; j < n_classes; ++j) {
    VectorXd sum = VectorXd::Zero(dim);
    for (std::size_t r : members[j]) sum += X.row(static_cast<Eigen::Index>(r)).transpose();
    model.class_means.row(static_cast<Eigen::Index>(j)) = sum.transpose() / static_cast<double>(members[j].size());
  }

  if (!options.priors.empty()) {
    if (options.priors.size() != n_classes) throw Error(ErrorCode::InvalidArgument, "prior count mismatch");
    const double total = std::accumulate(options.priors.begin(), options.priors.end(), 0.0);
    if (!(total > 0.0)) throw Error(ErrorCode::InvalidArgument, "priors must have a positive sum");
    for (double p : options.priors) model.priors.push_back(p / total);
  } else {
    for (std::size_t j = 0; j < n_classes; ++j) {
      model.priors.push_back(static_cast<double>(members[j].size()) / static_cast<double>(n));
    }
  }

  if (kind == ClassifierKind::KNN) {
    model.train_points = X;
    model.train_labels = labels;
    return model;
  }

  std::vector<MatrixXd> class_scatter;
  MatrixXd pooled = MatrixXd::Zero(dim, dim);
  for (std::size_t j = 0; j < n_classes; ++j) {
    class_scatter.push_back(
        scatter_about(X, members[j], model.class_means.row(static_cast<Eigen::Index>(j)).transpose()));
    pooled += class_scatter.back();
  }
  pooled /= static_cast<double>(n);

  if (options.cov_ridge) {
    model.cov_ridge = *options.cov_ridge;
  } else {
    double base = pooled.diagonal().mean();
    if (!(base > 0.0)) {
      std::vector<std::size_t> all(n);
      std::iota(all.begin(), all.end(), std::size_t{0});
      const VectorXd center = X.colwise().mean().transpose();
      base = (scatter_about(X, all, center) / static_cast<double>(n)).diagonal().mean();
    }
    model.cov_ridge = 1e-6 * base;
  }

  if (kind == ClassifierKind::GaussianLinear) {
    model.covariances.push_back(pooled);
  } else {
    for (std::size_t j = 0; j < n_classes; ++j) {
      model.covariances.push_back(class_scatter[j] / static_cast<double>(members[j].size()));
    }
  }
  for (auto& cov : model.covariances) {
    cov.diagonal().array() += model.cov_ridge;
    Eigen::LLT<MatrixXd> chol(cov);
    if (chol.info() != Eigen::Success || !(chol.rcond() > 1e-15)) {
      throw Error(ErrorCode::DegenerateCovariance,
                  "covariance is not positive definite even with ridge " + std::to_string(model.cov_ridge));
    }
    const double log_det = 2.0 * chol.matrixL().toDenseMatrix().diagonal().array().log().sum();
    model.cov_chol.push_back(std::move(chol));
    model.log_det.push_back(log_det);
  }
  return model;
}

VectorXd discriminant_scores(const ClassifierModel& model, const VectorXd& x) {
  if (model.kind == ClassifierKind::KNN) {
    throw Error(ErrorCode::InvalidArgument, "discriminant scores are defined for Gaussian classifiers");
  }
  if (x.size() != static_cast<Eigen::Index>(model.dimension())) {
    throw Error(ErrorCode::ShapeMismatch, "query has dimension " + std::to_string(x.size()));
  }
  const auto c = static_cast<Eigen::Index>(model.n_classes);
  VectorXd scores(c);
  if (model.kind == ClassifierKind::GaussianLinear) {
    const auto& chol = model.cov_chol.front();
    for (Eigen::Index j = 0; j < c; ++j) {
      const VectorXd mu = model.class_means.row(j).transpose();
      const VectorXd w = chol.solve(mu);
      scores(j) = w.dot(x) - 0.5 * w.dot(mu) + std::log(model.priors[static_cast<std::size_t>(j)]);
    }
    return scores;
  }
  for (Eigen::Index j = 0; j < c; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    const VectorXd diff = x - model.class_means.row(j).transpose();
    const VectorXd half = model.cov_chol[sj].matrixL().solve(diff);
    scores(j) = std::log(model.priors[sj]) - 0.5 * model.log_det[sj] - 0.5 * half.squaredNorm() -
                0.5 * static_cast<double>(diff.size()) * kLogTwoPi;
  }
  return scores;
}

std::vector<int> predict(const ClassifierModel& model, const RowMatrix& X) {
  if (X.cols() != static_cast<Eigen::Index>(model.dimension())) {
    throw Error(ErrorCode::ShapeMismatch, "queries have " + std::to_string(X.cols()) +
                                              " columns, classifier was fitted on " +
                                              std::to_string(model.dimension()));
  }
  const auto p = static_cast<std::size_t>(X.rows());
  std::vector<int> out(p);

  if (model.kind == ClassifierKind::KNN) {
    const auto& kern = kernels::active_kernels();
    const std::size_t dim = model.dimension();
    const std::size_t n_train = static_cast<std::size_t>(model.train_points.rows());
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(model.k_neighbors), n_train);
    std::vector<std::pair<double, std::size_t>> dist(n_train);
    for (std::size_t q = 0; q < p; ++q) {
      const double* query = X.row(static_cast<Eigen::Index>(q)).data();
      if (k == 1) {
        std::size_t best = 0;
        double best_d = kern.squared_distance(query, model.train_points.row(0).data(), dim);
        for (std::size_t t = 1; t < n_train; ++t) {
          const double d = kern.squared_distance(query, model.train_points.row(static_cast<Eigen::Index>(t)).data(), dim);
          if (d < best_d) {
            best_d = d;
            best = t;
          }
        }
        out[q] = model.train_labels[best];
        continue;
      }
      for (std::size_t t = 0; t < n_train; ++t) {
        dist[t] = {kern.squared_distance(query, model.train_points.row(static_cast<Eigen::Index>(t)).data(), dim), t};
      }
      std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
      std::vector<std::size_t> votes(model.n_classes, 0);
      for (std::size_t i = 0; i < k; ++i) ++votes[static_cast<std::size_t>(model.train_labels[dist[i].second])];
      out[q] = static_cast<int>(std::max_element(votes.begin(), votes.end()) - votes.begin());
    }
    return out;
  }

  for (std::size_t q = 0; q < p; ++q) {
    const VectorXd scores = discriminant_scores(model, X.row(static_cast<Eigen::Index>(q)).transpose());
    Eigen::Index best = 0;
    for (Eigen::Index j = 1; j < scores.size(); ++j) {
      if (scores(j) > scores(best)) best = j;
    }
    out[q] = static_cast<int>(best);
  }
  return out;
}

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth) {
  if (predicted.size() != truth.size() || truth.empty()) {
    throw Error(ErrorCode::ShapeMismatch, "prediction and truth lengths differ or are empty");
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) correct += predicted[i] == truth[i] ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(truth.size());
}

}  // namespace godisc
