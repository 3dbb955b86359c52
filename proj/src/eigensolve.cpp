#include "godisc/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "godisc/error.hpp"
#include "godisc/random.hpp"

namespace godisc {
namespace {

using ComplexVector = Eigen::VectorXcd;

void check_shape(const MatrixXd& A, const ScatterStats& stats) {
  const auto m = static_cast<Eigen::Index>(stats.n_features());
  if (A.rows() != m || A.cols() != m) {
    throw Error(ErrorCode::ShapeMismatch, "operator is " + std::to_string(A.rows()) + "x" +
                                              std::to_string(A.cols()) + ", expected " +
                                              std::to_string(m) + "x" + std::to_string(m));
  }
  if (!A.allFinite()) throw Error(ErrorCode::InvalidArgument, "operator has non-finite entries");
}

// Rotates a complex eigenvector so its largest entry is real, then keeps the
// real part, normalized.
VectorXd real_direction(const ComplexVector& z) {
  Eigen::Index pivot = 0;
  z.cwiseAbs().maxCoeff(&pivot);
  const std::complex<double> phase = z(pivot) / std::abs(z(pivot));
  VectorXd v = (z * std::conj(phase)).real();
  const double norm = v.norm();
  if (norm > 0.0) v /= norm;
  fix_sign(v);
  return v;
}

VectorXd start_vector(Eigen::Index m) {
  Rng rng(0x9E3779B97F4A7C15ULL);
  VectorXd v(m);
  for (Eigen::Index i = 0; i < m; ++i) v(i) = rng.uniform(-1.0, 1.0);
  return v / v.norm();
}

struct Candidate {
  std::complex<double> value;
  VectorXd vector;
};

// Index of the eigenvalue with the largest real part; lowest index on ties.
Eigen::Index argmax_real(const ComplexVector& values) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    if (values(i).real() > values(best).real()) best = i;
  }
  return best;
}

Candidate dense_largest(const MatrixXd& A, const ScatterStats& stats) {
  Eigen::EigenSolver<MatrixXd> solver(stats.within_inv * A);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "dense eigensolver did not converge");
  }
  const Eigen::Index best = argmax_real(solver.eigenvalues());
  return {solver.eigenvalues()(best), real_direction(solver.eigenvectors().col(best))};
}

}  // namespace

void fix_sign(VectorXd& v) {
  if (v.size() == 0) return;
  Eigen::Index pivot = 0;
  double best = std::abs(v(0));
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (std::abs(v(i)) > best) {
      best = std::abs(v(i));
      pivot = i;
    }
  }
  if (v(pivot) < 0.0) v = -v;
}

std::vector<EigenPair> generalized_eig_all(const MatrixXd& A, const ScatterStats& stats) {
  check_shape(A, stats);
  const Eigen::Index m = A.rows();
  std::vector<EigenPair> pairs;
  pairs.reserve(static_cast<std::size_t>(m));

  const double a_norm = A.norm();
  const bool symmetric = (A - A.transpose()).norm() <= 1e-12 * a_norm;
  if (symmetric) {
    // L^{-1} A L^{-T} shares its eigenvalues with S_W_reg^{-1} A.
    const auto L = stats.within_chol.matrixL();
    MatrixXd half = L.solve(A);
    MatrixXd reduced = L.solve(half.transpose());
    reduced = 0.5 * (reduced + reduced.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(reduced);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::ConvergenceFailure, "symmetric eigensolver did not converge");
    }
    const auto U = stats.within_chol.matrixU();
    for (Eigen::Index i = m - 1; i >= 0; --i) {
      VectorXd v = U.solve(solver.eigenvectors().col(i));
      v.normalize();
      fix_sign(v);
      pairs.push_back({solver.eigenvalues()(i), std::move(v), 0.0, false});
    }
  } else {
    Eigen::EigenSolver<MatrixXd> solver(stats.within_inv * A);
    if (solver.info() != Eigen::Success) {
      throw Error(ErrorCode::ConvergenceFailure, "nonsymmetric eigensolver did not converge");
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      const std::complex<double> lambda = solver.eigenvalues()(i);
      pairs.push_back({lambda.real(), real_direction(solver.eigenvectors().col(i)),
                       std::abs(lambda.imag()), false});
    }
  }

  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const EigenPair& a, const EigenPair& b) { return a.value > b.value; });
  double largest = 0.0;
  for (const auto& p : pairs) largest = std::max(largest, std::abs(p.value));
  for (auto& p : pairs) p.numerically_zero = std::abs(p.value) <= 1e-9 * largest;
  return pairs;
}

EigenPair largest_eigenpair(const MatrixXd& A, const ScatterStats& stats,
                            const LargestEigenOptions& options) {
  check_shape(A, stats);
  const Eigen::Index m = A.rows();
  const Eigen::Index krylov = std::min<Eigen::Index>(m, std::max(1, options.max_krylov));
  auto apply = [&](const VectorXd& x) -> VectorXd { return stats.within_inv * (A * x); };

  VectorXd x = start_vector(m);
  Candidate found{0.0, x};
  double scale = 0.0;
  bool converged = false;

  MatrixXd V(m, krylov + 1);
  MatrixXd H(krylov + 1, krylov);
  for (int restart = 0; restart <= options.max_restarts && !converged; ++restart) {
    V.setZero();
    H.setZero();
    V.col(0) = x;
    Eigen::Index size = krylov;
    for (Eigen::Index j = 0; j < krylov; ++j) {
      VectorXd w = apply(V.col(j));
      // Modified Gram-Schmidt, two passes.
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index i = 0; i <= j; ++i) {
          const double h = V.col(i).dot(w);
          H(i, j) += h;
          w.noalias() -= h * V.col(i);
        }
      }
      const double beta = w.norm();
      H(j + 1, j) = beta;
      const double h_norm = H.topLeftCorner(j + 2, j + 1).norm();
      if (beta <= 1e-14 * h_norm || beta == 0.0) {
        size = j + 1;  // invariant subspace reached
        break;
      }
      V.col(j + 1) = w / beta;
    }

    const MatrixXd hess = H.topLeftCorner(size, size);
    scale = std::max(scale, hess.norm());
    Eigen::EigenSolver<MatrixXd> ritz(hess);
    if (ritz.info() != Eigen::Success) break;
    const Eigen::Index best = argmax_real(ritz.eigenvalues());
    const ComplexVector y = ritz.eigenvectors().col(best);
    const ComplexVector z = V.leftCols(size).cast<std::complex<double>>() * y;
    found = {ritz.eigenvalues()(best), real_direction(z)};

    const double lambda = found.value.real();
    const double residual = (apply(found.vector) - lambda * found.vector).norm();
    converged = residual <= options.tolerance * std::max(scale, std::abs(lambda)) ||
                (scale == 0.0 && residual == 0.0);
    x = found.vector;
  }

  if (!converged) {
    found = dense_largest(A, stats);
    scale = std::max(scale, std::abs(found.value));
  }

  EigenPair pair;
  pair.value = found.value.real();
  pair.vector = std::move(found.vector);
  pair.imag_residual = std::abs(found.value.imag());
  pair.numerically_zero = std::abs(pair.value) <= 1e-9 * scale;
  if (pair.imag_residual > 1e-6 * std::abs(found.value) && pair.imag_residual > 1e-9 * scale) {
    throw Error(ErrorCode::ComplexDominant,
                "largest eigenvalue has imaginary part " + std::to_string(pair.imag_residual) +
                    " against real part " + std::to_string(pair.value));
  }
  return pair;
}

double eigen_residual(const MatrixXd& A, const ScatterStats& stats, const EigenPair& pair) {
  return (stats.within_inv * (A * pair.vector) - pair.value * pair.vector).norm();
}

}  // namespace godisc
