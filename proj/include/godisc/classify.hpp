#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "godisc/types.hpp"

namespace godisc {

enum class ClassifierKind { KNN, GaussianLinear, GaussianQuadratic };

/// CLI spelling: knn (alias 1nn), linear, quadratic.
std::string_view classifier_name(ClassifierKind kind) noexcept;
ClassifierKind parse_classifier(std::string_view name);

struct ClassifierOptions {
  int k_neighbors = 1;
  // Added to every covariance diagonal. Unset: 1e-6 times the mean diagonal
  // of the pooled within-class covariance (of the total covariance if that
  // is zero).
  std::optional<double> cov_ridge;
  // Empty: empirical class frequencies.
  std::vector<double> priors;
};

/// Classifier fitted in a projected K-dimensional subspace.
///
/// Gaussian variants use maximum-likelihood (1/N_j, pooled 1/N) covariances
/// plus `cov_ridge` on the diagonal; the linear variant shares one pooled
/// covariance across classes.
struct ClassifierModel {
  ClassifierKind kind = ClassifierKind::KNN;
  int k_neighbors = 1;
  std::size_t n_classes = 0;
  MatrixXd class_means;  // C x K
  std::vector<MatrixXd> covariances;  // one shared, or one per class
  std::vector<double> priors;
  double cov_ridge = 0.0;

  // KNN
  RowMatrix train_points;
  std::vector<int> train_labels;

  // Gaussian: Cholesky factors and log-determinants of `covariances`.
  std::vector<Eigen::LLT<MatrixXd>> cov_chol;
  std::vector<double> log_det;

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(class_means.cols()); }
};

ClassifierModel fit_classifier(ClassifierKind kind, const RowMatrix& X, const std::vector<int>& labels,
                               std::size_t n_classes, const ClassifierOptions& options = {});

/// Per-class discriminant scores for one query (Gaussian kinds only). The
/// linear classifier drops the class-independent quadratic term, so its
/// scores are affine in x.
VectorXd discriminant_scores(const ClassifierModel& model, const VectorXd& x);

/// KNN: nearest training point by Euclidean distance, lowest training index
/// on ties (majority vote with lowest class on ties when k > 1).
/// Gaussian: argmax of the scores, lowest class index on ties.
std::vector<int> predict(const ClassifierModel& model, const RowMatrix& X);

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth);

}  // namespace godisc
