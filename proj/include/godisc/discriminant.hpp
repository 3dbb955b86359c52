#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "godisc/dataio.hpp"
#include "godisc/scatter.hpp"
#include "godisc/types.hpp"

namespace godisc {

enum class Method { ClassicLDA, GramSchmidtLDA, GOLDA, FoleySammon, PCA };

/// CLI spelling: classic-lda, gram-schmidt-lda, go-lda, foley-sammon, pca.
std::string_view method_name(Method method) noexcept;
Method parse_method(std::string_view name);

/// Largest number of directions `method` can produce for C classes in R^M.
std::size_t max_directions(Method method, std::size_t n_classes, std::size_t n_features) noexcept;

/// Ordered unit directions (columns of `directions`, M x K) with one ratio per
/// direction: the Fisher ratio for the discriminant methods, the explained
/// variance for PCA.
struct DiscriminantModel {
  Method method = Method::GOLDA;
  MatrixXd directions;
  std::vector<double> ratios;
  double delta = kDefaultDelta;
  std::size_t k_requested = 0;

  std::size_t n_features() const noexcept { return static_cast<std::size_t>(directions.rows()); }
  std::size_t n_directions() const noexcept { return static_cast<std::size_t>(directions.cols()); }
};

/// U = [u_1 .. u_{n-1}], B = U' S_W^{-1} S_B, T = U' S_W^{-1} U.
struct ConstraintMatrices {
  MatrixXd U;
  MatrixXd B;
  MatrixXd T;
  Eigen::LLT<MatrixXd> T_chol;

  /// U T^{-1} B, the rank-(n-1) term removed from S_B.
  MatrixXd correction() const;
};

/// `prior` holds the previous directions as columns (mutually orthogonal, unit).
ConstraintMatrices build_constraints(const MatrixXd& prior, const ScatterStats& stats);

// Each method has a dataset overload that builds ScatterStats with `delta`,
// and a stats overload for callers that already have them.

DiscriminantModel classic_lda(const ScatterStats& stats, std::size_t k);
DiscriminantModel classic_lda(const LabeledDataset& data, std::size_t k, double delta = kDefaultDelta);

/// Classical Gram-Schmidt over the columns, each result normalized and
/// sign-fixed. Throws DegenerateDirection when a column is (numerically) in
/// the span of the earlier ones.
MatrixXd gram_schmidt_orthonormalize(const MatrixXd& columns);

/// Classic-LDA's C-1 directions orthonormalized by classical Gram-Schmidt.
DiscriminantModel gram_schmidt_lda(const ScatterStats& stats);
DiscriminantModel gram_schmidt_lda(const LabeledDataset& data, double delta = kDefaultDelta);

/// Sequential orthogonal Fisher-optimal directions. u_1 is the leading
/// classic-LDA direction; every later u_n is the top eigenvector of
/// S_W^{-1}(S_B - U T^{-1} B) built from u_1..u_{n-1}, which maximizes the
/// Fisher ratio over the orthogonal complement of the earlier directions.
DiscriminantModel go_lda(const ScatterStats& stats, std::size_t k);
DiscriminantModel go_lda(const LabeledDataset& data, std::size_t k, double delta = kDefaultDelta);

/// Two-class recursion d_n = a_n S_W^{-1}(s_b - D S^{-1} (1/a_1, 0, ..., 0)').
DiscriminantModel foley_sammon(const ScatterStats& stats, std::size_t k);
DiscriminantModel foley_sammon(const LabeledDataset& data, std::size_t k, double delta = kDefaultDelta);

/// Principal axes of the 1/N total covariance; labels are ignored.
DiscriminantModel pca(const LabeledDataset& data, std::size_t k);

/// Fits any method. PCA ignores `delta` and records 0.
DiscriminantModel fit_method(Method method, const LabeledDataset& data, std::size_t k,
                             double delta = kDefaultDelta);

/// X (P x M) times the first `k` directions (all when k == 0).
MatrixXd project(const DiscriminantModel& model, const MatrixXd& X, std::size_t k = 0);

}  // namespace godisc
