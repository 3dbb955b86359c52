#include <doctest.h>

#include <cmath>
#include <random>

#include "godisc/classify.hpp"
#include "godisc/dataio.hpp"
#include "godisc/error.hpp"
#include "oracles.hpp"

using namespace godisc;

namespace {

RowMatrix column(std::initializer_list<double> values) {
  RowMatrix X(static_cast<Eigen::Index>(values.size()), 1);
  Eigen::Index i = 0;
  for (double v : values) X(i++, 0) = v;
  return X;
}

RowMatrix column3(double a, double b, double c) {
  RowMatrix X(1, 3);
  X << a, b, c;
  return X;
}

}  // namespace

TEST_CASE("1-NN") {
  const RowMatrix X = column({0.0, 1.0, 5.0, 6.0});
  const std::vector<int> y{0, 0, 1, 1};
  const auto m = fit_classifier(ClassifierKind::KNN, X, y, 2);
  CHECK(predict(m, X) == y);
  CHECK(predict(m, column({5.0}))[0] == 1);
  CHECK(predict(m, column({3.0}))[0] == 0);

  RowMatrix T(2, 1);
  T << 4.0, 2.0;
  const auto flipped = fit_classifier(ClassifierKind::KNN, T, {1, 0}, 2);
  CHECK(predict(flipped, column({3.0}))[0] == 1);

  const auto blobs = make_blobs(200, 3, 4, 5);
  const auto mb = fit_classifier(ClassifierKind::KNN, blobs.features, blobs.labels, 4);
  CHECK(accuracy(predict(mb, blobs.features), blobs.labels) == 1.0);
}

TEST_CASE("k-NN majority vote breaks ties toward the lower class") {
  const RowMatrix X = column({0.0, 1.0, 2.0, 3.0});
  ClassifierOptions opt;
  opt.k_neighbors = 2;
  const auto m = fit_classifier(ClassifierKind::KNN, X, {1, 0, 1, 1}, 2, opt);
  CHECK(predict(m, column({0.4}))[0] == 0);
  opt.k_neighbors = 3;
  const auto m3 = fit_classifier(ClassifierKind::KNN, X, {1, 0, 1, 1}, 2, opt);
  CHECK(predict(m3, column({0.4}))[0] == 1);
}

TEST_CASE("linear classifier threshold sits at the midpoint") {
  const RowMatrix X = column({-1.0, 0.0, 1.0, 9.0, 10.0, 11.0});
  const auto m = fit_classifier(ClassifierKind::GaussianLinear, X, {0, 0, 0, 1, 1, 1}, 2);
  CHECK(predict(m, column({4.99}))[0] == 0);
  CHECK(predict(m, column({5.01}))[0] == 1);
  const VectorXd mid = discriminant_scores(m, VectorXd::Constant(1, 5.0));
  CHECK(std::abs(mid(0) - mid(1)) <= 1e-9 * std::abs(mid(0)) + 1e-12);
  CHECK(predict(m, column({5.0}))[0] == 0);
}

TEST_CASE("linear discriminant scores are affine") {
  const auto d = make_blobs(150, 3, 3, 8);
  const auto m = fit_classifier(ClassifierKind::GaussianLinear, d.features, d.labels, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const VectorXd a = 5 * oracle::random_matrix(3, 1, seed).col(0);
    const VectorXd c = 5 * oracle::random_matrix(3, 1, 50 + seed).col(0);
    const VectorXd sa = discriminant_scores(m, a);
    const VectorXd sb = discriminant_scores(m, 0.5 * (a + c));
    const VectorXd sc = discriminant_scores(m, c);
    CHECK((sb - 0.5 * (sa + sc)).cwiseAbs().maxCoeff() <= 1e-9 * (1 + sa.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("quadratic classifier prefers the tighter class at the shared mean") {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> normal;
  RowMatrix X(400, 1);
  std::vector<int> y(400);
  for (int i = 0; i < 400; ++i) {
    const bool wide = i >= 200;
    X(i, 0) = (wide ? 3.0 : 1.0) * normal(gen);
    y[static_cast<std::size_t>(i)] = wide ? 1 : 0;
  }
  const auto m = fit_classifier(ClassifierKind::GaussianQuadratic, X, y, 2);
  const VectorXd s = discriminant_scores(m, VectorXd::Zero(1));
  const double v0 = m.covariances[0](0, 0);
  const double v1 = m.covariances[1](0, 0);
  const double mu0 = m.class_means(0, 0);
  const double mu1 = m.class_means(1, 0);
  const double log_density0 = -0.5 * std::log(2 * M_PI * v0) - mu0 * mu0 / (2 * v0);
  const double log_density1 = -0.5 * std::log(2 * M_PI * v1) - mu1 * mu1 / (2 * v1);
  CHECK(s(0) - s(1) == doctest::Approx(log_density0 - log_density1).epsilon(1e-12));
  CHECK(predict(m, column({0.0}))[0] == 0);
  CHECK(predict(m, column({8.0}))[0] == 1);
}

TEST_CASE("ridge rescues a single-sample class") {
  RowMatrix X(7, 3);
  X << 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 5, 5, 5;
  const std::vector<int> y{0, 0, 0, 0, 0, 0, 1};
  const auto m = fit_classifier(ClassifierKind::GaussianQuadratic, X, y, 2);
  CHECK(m.cov_ridge > 0);
  for (const auto& cov : m.covariances) CHECK(Eigen::LLT<MatrixXd>(cov).info() == Eigen::Success);
  CHECK(predict(m, column3(5, 5, 5))[0] == 1);
}

TEST_CASE("classifier errors") {
  const RowMatrix X = column({0.0, 1.0, 2.0});
  try {
    fit_classifier(ClassifierKind::GaussianLinear, X, {0, 0, 2}, 3);
    FAIL("expected EmptyClass");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyClass);
  }
  const RowMatrix flat = column({1.0, 1.0, 1.0, 1.0});
  try {
    fit_classifier(ClassifierKind::GaussianQuadratic, flat, {0, 0, 1, 1}, 2);
    FAIL("expected DegenerateCovariance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCovariance);
  }
  const auto m = fit_classifier(ClassifierKind::KNN, X, {0, 1, 1}, 2);
  RowMatrix wrong(1, 2);
  wrong << 0, 0;
  try {
    predict(m, wrong);
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
}

TEST_CASE("priors default to class frequencies and sum to one") {
  const RowMatrix X = column({0.0, 1.0, 2.0, 3.0});
  const auto m = fit_classifier(ClassifierKind::GaussianLinear, X, {0, 1, 1, 1}, 2);
  CHECK(m.priors[0] == doctest::Approx(0.25));
  CHECK(m.priors[0] + m.priors[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("predictions are invariant under a joint rotation") {
  const auto d = make_blobs(120, 3, 3, 17);
  const auto q = make_blobs(40, 3, 3, 18);
  Eigen::HouseholderQR<MatrixXd> qr(oracle::random_matrix(3, 3, 19));
  const MatrixXd R = qr.householderQ();
  const RowMatrix train_rot = d.features * R;
  const RowMatrix query_rot = q.features * R;
  for (auto kind : {ClassifierKind::KNN, ClassifierKind::GaussianLinear, ClassifierKind::GaussianQuadratic}) {
    CAPTURE(classifier_name(kind));
    ClassifierOptions opt;
    opt.cov_ridge = 0.0;
    const auto a = fit_classifier(kind, d.features, d.labels, 3, opt);
    const auto b = fit_classifier(kind, train_rot, d.labels, 3, opt);
    CHECK(predict(a, q.features) == predict(b, query_rot));
  }
}
