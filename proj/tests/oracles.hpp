#pragma once
// Reference computations for the tests. Deliberately naive: plain loops and
// textbook formulas, sharing nothing with the library beyond Eigen types.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Scatter {
  MatrixXd between;
  MatrixXd within;
};

// S_B = sum_j (m_j - m)(m_j - m)^T, S_W = sum_j sum_{x in j} (x - m_j)(x - m_j)^T.
template <typename Features>
Scatter naive_scatter(const Features& X, const std::vector<int>& labels, int n_classes) {
  const int n = static_cast<int>(X.rows());
  const int m = static_cast<int>(X.cols());
  MatrixXd means = MatrixXd::Zero(n_classes, m);
  std::vector<int> counts(static_cast<std::size_t>(n_classes), 0);
  VectorXd overall = VectorXd::Zero(m);
  for (int i = 0; i < n; ++i) {
    const int c = labels[static_cast<std::size_t>(i)];
    counts[static_cast<std::size_t>(c)]++;
    for (int f = 0; f < m; ++f) {
      means(c, f) += X(i, f);
      overall(f) += X(i, f);
    }
  }
  for (int c = 0; c < n_classes; ++c) means.row(c) /= counts[static_cast<std::size_t>(c)];
  overall /= n;

  Scatter s{MatrixXd::Zero(m, m), MatrixXd::Zero(m, m)};
  for (int c = 0; c < n_classes; ++c) {
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) s.between(a, b) += (means(c, a) - overall(a)) * (means(c, b) - overall(b));
    }
  }
  for (int i = 0; i < n; ++i) {
    const int c = labels[static_cast<std::size_t>(i)];
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) s.within(a, b) += (X(i, a) - means(c, a)) * (X(i, b) - means(c, b));
    }
  }
  return s;
}

inline double fisher(const VectorXd& v, const MatrixXd& between, const MatrixXd& within_reg) {
  return v.dot(between * v) / v.dot(within_reg * v);
}

// Orthonormal basis of the complement of span(U), from a full QR of U.
inline MatrixXd complement_basis(const MatrixXd& U) {
  const auto m = U.rows();
  if (U.cols() == 0) return MatrixXd::Identity(m, m);
  Eigen::HouseholderQR<MatrixXd> qr(U);
  const MatrixXd Q = qr.householderQ() * MatrixXd::Identity(m, m);
  return Q.rightCols(m - U.cols());
}

// Best Fisher ratio among `samples` random unit vectors orthogonal to the
// columns of U.
inline double random_search_max(const MatrixXd& between, const MatrixXd& within_reg, const MatrixXd& U,
                                int samples, std::uint64_t seed) {
  const MatrixXd basis = complement_basis(U);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  VectorXd z(basis.cols());
  double best = -1.0;
  for (int s = 0; s < samples; ++s) {
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = normal(gen);
    const VectorXd w = basis * z;
    best = std::max(best, fisher(w.normalized(), between, within_reg));
  }
  return best;
}

// (1/k)(W^-1 - [s'W^-2 s / s'W^-3 s] W^-2) s, normalized (k drops out).
inline VectorXd foley_sammon_second(const MatrixXd& within_inv, const VectorXd& s) {
  const MatrixXd w2 = within_inv * within_inv;
  const MatrixXd w3 = w2 * within_inv;
  const double ratio = s.dot(w2 * s) / s.dot(w3 * s);
  return ((within_inv - ratio * w2) * s).normalized();
}

// Positive roots of det(A - t B) by bracketing sign changes on a grid over
// (0, upper] and bisecting. Roots of even multiplicity are not found.
inline std::vector<double> pencil_roots(const MatrixXd& A, const MatrixXd& B, double upper, int grid = 200000) {
  const auto f = [&](double t) { return (A - t * B).determinant(); };
  std::vector<double> roots;
  double prev_t = upper * 1e-9;
  double prev_f = f(prev_t);
  for (int i = 1; i <= grid; ++i) {
    const double t = upper * static_cast<double>(i) / grid;
    const double ft = f(t);
    if ((prev_f < 0) != (ft < 0)) {
      double lo = prev_t, hi = t, flo = prev_f;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_t = t;
    prev_f = ft;
  }
  return roots;
}

inline MatrixXd random_spd(int m, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  MatrixXd G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G(i, j) = normal(gen);
  return G * G.transpose() + m * MatrixXd::Identity(m, m);
}

inline MatrixXd random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  MatrixXd G(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) G(i, j) = normal(gen);
  return G;
}

inline double max_offdiag_dot(const MatrixXd& D) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < D.cols(); ++i)
    for (Eigen::Index j = i + 1; j < D.cols(); ++j) worst = std::max(worst, std::abs(D.col(i).dot(D.col(j))));
  return worst;
}

inline double abs_cos(const VectorXd& a, const VectorXd& b) { return std::abs(a.dot(b)) / (a.norm() * b.norm()); }

}  // namespace oracle
