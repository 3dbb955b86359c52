#pragma once

#include <vector>

#include "godisc/scatter.hpp"
#include "godisc/types.hpp"

namespace godisc {

/// Eigenpair of the (generally nonsymmetric) operator S_W_reg^{-1} A.
struct EigenPair {
  double value = 0.0;
  VectorXd vector;             // unit 2-norm, sign fixed by fix_sign()
  double imag_residual = 0.0;  // |Im(lambda)| dropped when taking the real part
  bool numerically_zero = false;
};

/// Flips v so its largest-magnitude component (lowest index on ties) is positive.
void fix_sign(VectorXd& v);

/// All eigenpairs of S_W_reg^{-1} A, sorted by descending value (stable on
/// ties). Values below 1e-9 times the largest magnitude are flagged
/// `numerically_zero`. Symmetric A goes through the Cholesky factor of
/// S_W_reg, anything else through a dense real nonsymmetric solver.
std::vector<EigenPair> generalized_eig_all(const MatrixXd& A, const ScatterStats& stats);

struct LargestEigenOptions {
  int max_krylov = 40;
  int max_restarts = 300;
  double tolerance = 1e-12;  // residual, relative to the Ritz estimate of ||S_W^{-1} A||
};

/// Eigenpair of S_W_reg^{-1} A with the largest real part, found by restarted
/// Arnoldi with O(M^2) work per operator application. Falls back to a dense
/// solve if Arnoldi does not converge.
///
/// Throws ComplexDominant when |Im(lambda)| exceeds 1e-6 |lambda| and is not
/// negligible against the operator scale, ConvergenceFailure when both paths fail.
EigenPair largest_eigenpair(const MatrixXd& A, const ScatterStats& stats,
                            const LargestEigenOptions& options = {});

/// ||S_W^{-1} A v - lambda v||_2 for a returned pair.
double eigen_residual(const MatrixXd& A, const ScatterStats& stats, const EigenPair& pair);

}  // namespace godisc
