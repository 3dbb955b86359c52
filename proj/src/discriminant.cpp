#include "godisc/discriminant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "godisc/eigensolve.hpp"
#include "godisc/error.hpp"
#include "godisc/kernels.hpp"

namespace godisc {
namespace {

constexpr double kReorthogonalizeAbove = 1e-10;
constexpr double kOrthogonalityLimit = 1e-6;

void check_k(std::size_t k, std::size_t limit, std::string_view method) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, std::string(method) + ": k must be >= 1");
  if (k > limit) {
    throw Error(ErrorCode::KTooLarge, std::string(method) + ": k = " + std::to_string(k) +
                                          " exceeds the limit of " + std::to_string(limit));
  }
}

// Removes the components of `v` along the (orthonormal) columns of `prior`
// when they exceed kReorthogonalizeAbove. Returns true if `v` was modified.
bool enforce_orthogonality(VectorXd& v, const MatrixXd& prior, std::string_view method,
                           std::size_t index) {
  if (prior.cols() == 0) return false;
  VectorXd overlap = prior.transpose() * v;
  if (overlap.cwiseAbs().maxCoeff() <= kReorthogonalizeAbove) return false;
  v.noalias() -= prior * overlap;
  const double norm = v.norm();
  if (norm < 1e-8) {
    throw Error(ErrorCode::OrthogonalityLoss, std::string(method) + ": direction " +
                                                  std::to_string(index + 1) +
                                                  " lies in the span of the earlier directions");
  }
  v /= norm;
  overlap = prior.transpose() * v;
  if (overlap.cwiseAbs().maxCoeff() > kOrthogonalityLimit) {
    throw Error(ErrorCode::OrthogonalityLoss, std::string(method) + ": direction " +
                                                  std::to_string(index + 1) +
                                                  " still overlaps earlier directions after re-orthogonalization");
  }
  return true;
}

}  // namespace

std::string_view method_name(Method method) noexcept {
  switch (method) {
    case Method::ClassicLDA: return "classic-lda";
    case Method::GramSchmidtLDA: return "gram-schmidt-lda";
    case Method::GOLDA: return "go-lda";
    case Method::FoleySammon: return "foley-sammon";
    case Method::PCA: return "pca";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::ClassicLDA, Method::GramSchmidtLDA, Method::GOLDA, Method::FoleySammon,
                   Method::PCA}) {
    if (name == method_name(m)) return m;
  }
  if (name == "lda") return Method::ClassicLDA;
  if (name == "golda") return Method::GOLDA;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

std::size_t max_directions(Method method, std::size_t n_classes, std::size_t n_features) noexcept {
  switch (method) {
    case Method::ClassicLDA:
    case Method::GramSchmidtLDA:
      return std::min(n_classes - 1, n_features);
    case Method::FoleySammon:
      return n_classes == 2 ? n_features : 0;
    case Method::GOLDA:
    case Method::PCA:
      return n_features;
  }
  return 0;
}

MatrixXd ConstraintMatrices::correction() const { return U * T_chol.solve(B); }

ConstraintMatrices build_constraints(const MatrixXd& prior, const ScatterStats& stats) {
  if (prior.cols() == 0) throw Error(ErrorCode::InvalidArgument, "no prior directions");
  if (prior.rows() != static_cast<Eigen::Index>(stats.n_features())) {
    throw Error(ErrorCode::ShapeMismatch, "prior directions have length " + std::to_string(prior.rows()));
  }
  ConstraintMatrices out;
  out.U = prior;
  const MatrixXd whitened = stats.within_inv * prior;  // S_W^{-1} u_i, O(M^2) per direction
  out.B = whitened.transpose() * stats.between;
  out.T = prior.transpose() * whitened;
  out.T = 0.5 * (out.T + out.T.transpose()).eval();
  out.T_chol.compute(out.T);
  if (out.T_chol.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularT, "U' S_W^{-1} U is not positive definite");
  }
  return out;
}

DiscriminantModel classic_lda(const ScatterStats& stats, std::size_t k) {
  check_k(k, max_directions(Method::ClassicLDA, stats.n_classes(), stats.n_features()), "classic-lda");
  const auto pairs = generalized_eig_all(stats.between, stats);
  DiscriminantModel model;
  model.method = Method::ClassicLDA;
  model.delta = stats.delta;
  model.k_requested = k;
  model.directions.resize(static_cast<Eigen::Index>(stats.n_features()), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    model.directions.col(static_cast<Eigen::Index>(i)) = pairs[i].vector;
    model.ratios.push_back(fisher_ratio(pairs[i].vector, stats));
  }
  return model;
}

DiscriminantModel classic_lda(const LabeledDataset& data, std::size_t k, double delta) {
  return classic_lda(compute_stats(data, delta), k);
}

MatrixXd gram_schmidt_orthonormalize(const MatrixXd& columns) {
  MatrixXd ortho(columns.rows(), columns.cols());
  std::vector<double> norms2;
  for (Eigen::Index i = 0; i < columns.cols(); ++i) {
    const VectorXd v = columns.col(i);
    VectorXd w = v;
    for (Eigen::Index j = 0; j < i; ++j) {
      w -= (v.dot(ortho.col(j)) / norms2[static_cast<std::size_t>(j)]) * ortho.col(j);
    }
    const double scale = std::max(v.norm(), 1.0);
    if (w.norm() < 1e-10 * scale) {
      throw Error(ErrorCode::DegenerateDirection,
                  "vector " + std::to_string(i + 1) + " is linearly dependent on the earlier ones");
    }
    ortho.col(i) = w;
    norms2.push_back(w.squaredNorm());
  }
  for (Eigen::Index i = 0; i < ortho.cols(); ++i) {
    VectorXd u = ortho.col(i).normalized();
    fix_sign(u);
    ortho.col(i) = u;
  }
  return ortho;
}

DiscriminantModel gram_schmidt_lda(const ScatterStats& stats) {
  const std::size_t k = max_directions(Method::GramSchmidtLDA, stats.n_classes(), stats.n_features());
  DiscriminantModel model = classic_lda(stats, k);
  model.method = Method::GramSchmidtLDA;
  model.directions = gram_schmidt_orthonormalize(model.directions);
  for (std::size_t i = 0; i < k; ++i) {
    model.ratios[i] = fisher_ratio(model.directions.col(static_cast<Eigen::Index>(i)), stats);
  }
  return model;
}

DiscriminantModel gram_schmidt_lda(const LabeledDataset& data, double delta) {
  return gram_schmidt_lda(compute_stats(data, delta));
}

DiscriminantModel go_lda(const ScatterStats& stats, std::size_t k) {
  const std::size_t m = stats.n_features();
  check_k(k, m, "go-lda");
  DiscriminantModel model;
  model.method = Method::GOLDA;
  model.delta = stats.delta;
  model.k_requested = k;
  model.directions.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));

  const EigenPair first = largest_eigenpair(stats.between, stats);
  model.directions.col(0) = first.vector;
  model.ratios.push_back(first.value);

  for (std::size_t n = 1; n < k; ++n) {
    const auto prior = model.directions.leftCols(static_cast<Eigen::Index>(n));
    const ConstraintMatrices cons = build_constraints(prior, stats);
    const MatrixXd reduced = stats.between - cons.correction();
    const EigenPair step = largest_eigenpair(reduced, stats);

    VectorXd u = step.vector;
    double ratio = step.value;
    if (enforce_orthogonality(u, prior, "go-lda", n)) {
      fix_sign(u);
      ratio = fisher_ratio(u, stats);
    }
    model.directions.col(static_cast<Eigen::Index>(n)) = u;
    model.ratios.push_back(ratio);
  }
  return model;
}

DiscriminantModel go_lda(const LabeledDataset& data, std::size_t k, double delta) {
  return go_lda(compute_stats(data, delta), k);
}

DiscriminantModel foley_sammon(const ScatterStats& stats, std::size_t k) {
  const VectorXd sb = binary_mean_difference(stats);
  const std::size_t m = stats.n_features();
  check_k(k, m, "foley-sammon");

  DiscriminantModel model;
  model.method = Method::FoleySammon;
  model.delta = stats.delta;
  model.k_requested = k;
  model.directions.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));

  const VectorXd first = stats.within_inv * sb;
  const double first_norm = first.norm();
  if (first_norm == 0.0) {
    throw Error(ErrorCode::DegenerateDirection, "foley-sammon: the two class means coincide");
  }
  const double alpha1 = 1.0 / first_norm;
  // Keep the natural orientation of d_1 = alpha_1 S_W^{-1} s_b during the
  // recursion; signs are normalized only in the returned model.
  MatrixXd d(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
  d.col(0) = alpha1 * first;

  for (std::size_t n = 1; n < k; ++n) {
    const auto prior = d.leftCols(static_cast<Eigen::Index>(n));
    MatrixXd recursion = prior.transpose() * stats.within_inv * prior;
    recursion = 0.5 * (recursion + recursion.transpose()).eval();
    Eigen::LLT<MatrixXd> chol(recursion);
    if (chol.info() != Eigen::Success) {
      throw Error(ErrorCode::SingularRecursionMatrix,
                  "foley-sammon: recursion matrix of order " + std::to_string(n) + " is singular");
    }
    VectorXd rhs = VectorXd::Zero(static_cast<Eigen::Index>(n));
    rhs(0) = 1.0 / alpha1;
    VectorXd next = stats.within_inv * (sb - prior * chol.solve(rhs));
    const double norm = next.norm();
    if (!(norm > 0.0)) {
      throw Error(ErrorCode::DegenerateDirection,
                  "foley-sammon: direction " + std::to_string(n + 1) + " vanished");
    }
    next /= norm;
    enforce_orthogonality(next, prior, "foley-sammon", n);
    d.col(static_cast<Eigen::Index>(n)) = next;
  }

  for (std::size_t n = 0; n < k; ++n) {
    VectorXd v = d.col(static_cast<Eigen::Index>(n));
    fix_sign(v);
    model.directions.col(static_cast<Eigen::Index>(n)) = v;
    model.ratios.push_back(fisher_ratio(v, stats));
  }
  return model;
}

DiscriminantModel foley_sammon(const LabeledDataset& data, std::size_t k, double delta) {
  if (data.n_classes() != 2) {
    throw Error(ErrorCode::NotBinary,
                "foley-sammon needs 2 classes, got " + std::to_string(data.n_classes()));
  }
  return foley_sammon(compute_stats(data, delta), k);
}

DiscriminantModel pca(const LabeledDataset& data, std::size_t k) {
  const std::size_t m = data.n_features();
  const std::size_t n = data.n_samples();
  check_k(k, m, "pca");
  const auto& kern = kernels::active_kernels();

  const VectorXd mean = data.features.colwise().mean().transpose();
  RowMatrix upper = RowMatrix::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  std::vector<double> dev(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < m; ++f) {
      dev[f] = data.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(f)) -
               mean(static_cast<Eigen::Index>(f));
    }
    kern.rank1_upper(dev.data(), upper.data(), m);
  }
  MatrixXd cov = upper.triangularView<Eigen::Upper>();
  cov.triangularView<Eigen::StrictlyLower>() = cov.transpose();
  cov /= static_cast<double>(n);

  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "pca: covariance eigensolver did not converge");
  }
  DiscriminantModel model;
  model.method = Method::PCA;
  model.delta = 0.0;
  model.k_requested = k;
  model.directions.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    const Eigen::Index src = static_cast<Eigen::Index>(m - 1 - i);
    VectorXd v = solver.eigenvectors().col(src);
    fix_sign(v);
    model.directions.col(static_cast<Eigen::Index>(i)) = v;
    model.ratios.push_back(solver.eigenvalues()(src));
  }
  return model;
}

DiscriminantModel fit_method(Method method, const LabeledDataset& data, std::size_t k, double delta) {
  switch (method) {
    case Method::ClassicLDA: return classic_lda(data, k, delta);
    case Method::GOLDA: return go_lda(data, k, delta);
    case Method::FoleySammon: return foley_sammon(data, k, delta);
    case Method::PCA: return pca(data, k);
    case Method::GramSchmidtLDA: {
      const std::size_t limit = max_directions(method, data.n_classes(), data.n_features());
      check_k(k, limit, "gram-schmidt-lda");
      DiscriminantModel model = gram_schmidt_lda(data, delta);
      model.directions.conservativeResize(Eigen::NoChange, static_cast<Eigen::Index>(k));
      model.ratios.resize(k);
      model.k_requested = k;
      return model;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

MatrixXd project(const DiscriminantModel& model, const MatrixXd& X, std::size_t k) {
  if (X.cols() != model.directions.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "input has " + std::to_string(X.cols()) +
                                              " columns, model expects " +
                                              std::to_string(model.directions.rows()));
  }
  if (k == 0) k = model.n_directions();
  if (k > model.n_directions()) {
    throw Error(ErrorCode::KTooLarge, "model has only " + std::to_string(model.n_directions()) +
                                          " directions, " + std::to_string(k) + " requested");
  }
  return X * model.directions.leftCols(static_cast<Eigen::Index>(k));
}

}  // namespace godisc
