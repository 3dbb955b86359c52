#include <doctest.h>

#include <algorithm>

#include "godisc/eigensolve.hpp"
#include "godisc/error.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace godisc;

TEST_CASE("diagonal pencil") {
  const auto s = testutil::stats_from(MatrixXd::Zero(2, 2), MatrixXd::Identity(2, 2));
  const MatrixXd A = Eigen::Vector2d(3, 1).asDiagonal();
  const auto all = generalized_eig_all(A, s);
  REQUIRE(all.size() == 2);
  CHECK(all[0].value == doctest::Approx(3.0));
  CHECK(all[1].value == doctest::Approx(1.0));
  CHECK(all[0].vector.isApprox(Eigen::Vector2d(1, 0)));
  CHECK(all[1].vector.isApprox(Eigen::Vector2d(0, 1)));

  const auto top = largest_eigenpair(A, s);
  CHECK(top.value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(top.vector.isApprox(Eigen::Vector2d(1, 0), 1e-10));
}

TEST_CASE("fix_sign makes the largest component positive, first on ties") {
  VectorXd v(3);
  v << 0.1, -0.9, 0.3;
  fix_sign(v);
  CHECK(v(1) == doctest::Approx(0.9));
  VectorXd w(2);
  w << -0.5, 0.5;
  fix_sign(w);
  CHECK(w(0) == doctest::Approx(0.5));
}

TEST_CASE("rank-2 pencil in R^4 matches determinant root finding") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    CAPTURE(seed);
    const MatrixXd W = oracle::random_spd(4, seed);
    const MatrixXd G = oracle::random_matrix(4, 2, seed + 100);
    const MatrixXd A = G * G.transpose();
    const auto s = testutil::stats_from(A, W);
    const auto all = generalized_eig_all(A, s);

    const double upper = 1.1 * A.norm() * s.within_inv.norm();
    auto roots = oracle::pencil_roots(A, W, upper);
    REQUIRE(roots.size() == 2);
    std::sort(roots.rbegin(), roots.rend());
    CHECK(all[0].value == doctest::Approx(roots[0]).epsilon(1e-8));
    CHECK(all[1].value == doctest::Approx(roots[1]).epsilon(1e-8));
    CHECK(all[2].numerically_zero);
    CHECK(all[3].numerically_zero);
  }
}

TEST_CASE("residuals, unit norm, and agreement between the two solvers") {
  for (std::uint64_t seed : {21u, 22u, 23u, 24u}) {
    CAPTURE(seed);
    const int m = 6;
    const MatrixXd W = oracle::random_spd(m, seed);
    const MatrixXd G = oracle::random_matrix(m, 3, seed + 1);
    const MatrixXd A = G * G.transpose();
    const auto s = testutil::stats_from(A, W, 5e-3);
    const auto all = generalized_eig_all(A, s);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].value >= all[i].value);
    for (const auto& p : all) {
      CHECK(std::abs(p.vector.norm() - 1.0) <= 1e-10);
      CHECK(eigen_residual(A, s, p) <= 1e-7 * (1 + std::abs(p.value)) * A.norm());
    }
    const auto top = largest_eigenpair(A, s);
    CHECK(std::abs(top.vector.norm() - 1.0) <= 1e-10);
    CHECK(top.value == doctest::Approx(all[0].value).epsilon(1e-9));
    CHECK(oracle::abs_cos(top.vector, all[0].vector) >= 1 - 1e-9);
    CHECK(eigen_residual(A, s, top) <= 1e-7 * (1 + std::abs(top.value)) * A.norm());
  }
}

TEST_CASE("largest eigenpair of a nonsymmetric constrained operator") {
  const int m = 5;
  const MatrixXd W = oracle::random_spd(m, 31);
  const MatrixXd G = oracle::random_matrix(m, 3, 32);
  const MatrixXd SB = G * G.transpose();
  const auto s = testutil::stats_from(SB, W, 5e-3);
  const VectorXd u = oracle::random_matrix(m, 1, 33).col(0).normalized();
  const MatrixXd B = u.transpose() * s.within_inv * SB;
  const double t = u.dot(s.within_inv * u);
  const MatrixXd A = SB - u * B / t;

  const auto top = largest_eigenpair(A, s);
  CHECK(eigen_residual(A, s, top) <= 1e-7 * (1 + std::abs(top.value)) * A.norm());
  CHECK(std::abs(top.vector.dot(u)) <= 1e-8);
  const double best = oracle::random_search_max(SB, s.within_reg, u, 200000, 34);
  CHECK(top.value >= best * (1 - 1e-3));
  CHECK(top.value == doctest::Approx(oracle::fisher(top.vector, SB, s.within_reg)).epsilon(1e-8));
}

TEST_CASE("zero operator yields a zero eigenvalue without error") {
  const auto s = testutil::stats_from(MatrixXd::Zero(3, 3), oracle::random_spd(3, 41));
  const auto top = largest_eigenpair(MatrixXd::Zero(3, 3), s);
  CHECK(top.value == 0.0);
  CHECK(std::abs(top.vector.norm() - 1.0) <= 1e-10);
}

TEST_CASE("complex leading pair is ComplexDominant") {
  MatrixXd A(2, 2);
  A << 0, -1, 1, 0;
  const auto s0 = testutil::stats_from(MatrixXd::Zero(2, 2), MatrixXd::Identity(2, 2));
  CHECK_THROWS_AS(largest_eigenpair(A, s0), Error);
  A << 1, -2, 2, 1;
  const auto s = testutil::stats_from(MatrixXd::Zero(2, 2), MatrixXd::Identity(2, 2));
  try {
    largest_eigenpair(A, s);
    FAIL("expected ComplexDominant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ComplexDominant);
  }
}

TEST_CASE("repeated calls are bit-identical") {
  const auto s = testutil::stats_from(MatrixXd::Zero(6, 6), oracle::random_spd(6, 51), 5e-3);
  const MatrixXd G = oracle::random_matrix(6, 4, 52);
  const MatrixXd A = G * G.transpose();
  const auto a = largest_eigenpair(A, s);
  const auto b = largest_eigenpair(A, s);
  CHECK(a.value == b.value);
  CHECK(a.vector == b.vector);
  const auto x = generalized_eig_all(A, s);
  const auto y = generalized_eig_all(A, s);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i].vector == y[i].vector);
}
