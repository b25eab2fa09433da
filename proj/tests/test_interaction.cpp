#include <doctest.h>

#include <cmath>

#include "powerca/errors.hpp"
#include "powerca/interaction.hpp"
#include "powerca/transform.hpp"
#include "test_support.hpp"

using namespace powerca;
using doctest::Approx;
using testing::mat;
using testing::max_abs_diff;

namespace {

CorrespondenceMatrix random_P(std::mt19937_64& rng, Eigen::Index I, Eigen::Index J) {
  return normalize(ContingencyTable(testing::random_counts(rng, I, J)));
}

// Independent table r_i c_j built from random margins.
CorrespondenceMatrix independent_P(std::mt19937_64& rng, Eigen::Index I, Eigen::Index J) {
  const Vector a = testing::random_scales(rng, I, 1.0, 5.0);
  const Vector b = testing::random_scales(rng, J, 1.0, 5.0);
  return normalize(ContingencyTable(a * b.transpose()));
}

// lambda from its defining double sums, cell by cell.
Matrix lambda_by_loops(const Matrix& p, const Vector& wr, const Vector& wc) {
  const auto I = p.rows(), J = p.cols();
  Matrix out(I, J);
  double grand = 0.0;
  for (Eigen::Index i = 0; i < I; ++i)
    for (Eigen::Index j = 0; j < J; ++j) grand += wr(i) * wc(j) * std::log(p(i, j));
  for (Eigen::Index i = 0; i < I; ++i)
    for (Eigen::Index j = 0; j < J; ++j) {
      double gi = 0.0, gj = 0.0;
      for (Eigen::Index k = 0; k < J; ++k) gi += wc(k) * std::log(p(i, k));
      for (Eigen::Index k = 0; k < I; ++k) gj += wr(k) * std::log(p(k, j));
      out(i, j) = std::log(p(i, j)) - gi - gj + grand;
    }
  return out;
}

double weighted_defect(const Matrix& t, const Vector& wr, const Vector& wc) {
  const double rows = (t * wc).cwiseAbs().maxCoeff();
  const double cols = (t.transpose() * wr).cwiseAbs().maxCoeff();
  const double scale = std::max(t.cwiseAbs().maxCoeff(), 1e-300);
  return std::max(rows, cols) / scale;
}

}  // namespace

TEST_CASE("covariance residuals") {
  std::mt19937_64 rng(11);
  const auto Pi = independent_P(rng, 4, 3);
  CHECK(covariance_residuals(Pi).tau().cwiseAbs().maxCoeff() < 1e-15);

  const auto R = normalize(one_zero_column_reduction(12, 26, 1));
  CHECK(cross_covariance(R)(0, 0) == Approx(-275.0 / 96721.0).epsilon(1e-14));

  for (int t = 0; t < 5; ++t) {
    const auto P = random_P(rng, 2, 2);
    const Matrix s = cross_covariance(P);
    CHECK(s(0, 1) == Approx(-s(0, 0)).epsilon(1e-12));
    CHECK(s(1, 0) == Approx(-s(0, 0)).epsilon(1e-12));
    CHECK(s(1, 1) == Approx(s(0, 0)).epsilon(1e-12));
  }

  const auto P = random_P(rng, 3, 5);
  const Triplet t = covariance_residuals(P);
  CHECK(t.kind() == IndexKind::Covariance);
  CHECK(max_abs_diff(t.tau(), 15.0 * cross_covariance(P)) < 1e-15);
  CHECK(t.row_metric().isApprox(Vector::Constant(3, 1.0 / 3.0)));
  CHECK(t.col_metric().isApprox(Vector::Constant(5, 0.2)));
}

TEST_CASE("pearson contrast") {
  std::mt19937_64 rng(12);
  CHECK(pearson_contrast(independent_P(rng, 3, 4)).tau().cwiseAbs().maxCoeff() < 1e-14);

  const auto D = normalize(ContingencyTable(mat(2, 2, {1, 0, 0, 1})));
  CHECK(max_abs_diff(pearson_contrast(D).tau(), mat(2, 2, {1, -1, -1, 1})) < 1e-15);

  const auto P = random_P(rng, 4, 6);
  const Triplet t = pearson_contrast(P);
  CHECK(t.kind() == IndexKind::PearsonContrast);
  CHECK(t.row_metric() == P.r());
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 6; ++j)
      CHECK(cross_covariance(P)(i, j) ==
            Approx(P.r()(i) * P.c()(j) * t.tau()(i, j)).epsilon(1e-12));
}

TEST_CASE("log interaction") {
  std::mt19937_64 rng(13);
  const auto Pi = independent_P(rng, 5, 3);
  for (auto kind : {WeightKind::Uniform, WeightKind::Marginal})
    CHECK(log_interaction(Pi, make_weights(kind, Pi)).tau().cwiseAbs().maxCoeff() < 1e-14);

  const auto P2 = random_P(rng, 2, 2);
  const Matrix& p = P2.p();
  const double l11 = 0.25 * std::log(p(0, 0) * p(1, 1) / (p(0, 1) * p(1, 0)));
  CHECK(log_interaction(P2, uniform_weights(2, 2)).tau()(0, 0) == Approx(l11).epsilon(1e-13));

  for (auto kind : {WeightKind::Uniform, WeightKind::Marginal}) {
    const auto P = random_P(rng, 4, 5);
    const auto w = make_weights(kind, P);
    const Triplet t = log_interaction(P, w);
    CHECK(max_abs_diff(t.tau(), lambda_by_loops(P.p(), w.row_weights, w.col_weights)) < 1e-12);
    CHECK(t.kind() == IndexKind::LogInteraction);
  }

  Matrix z = testing::random_counts(rng, 3, 3);
  z(2, 1) = 0.0;
  try {
    log_interaction(normalize(ContingencyTable(z)), uniform_weights(3, 3));
    FAIL("expected NonPositiveCell");
  } catch (const NonPositiveCell& e) {
    CHECK(e.row() == 2);
    CHECK(e.col() == 1);
  }
}

TEST_CASE("log interaction is scale invariant") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix N = testing::random_counts(rng, 5, 4);
    const Vector a = testing::random_scales(rng, 5);
    const Vector b = testing::random_scales(rng, 4);
    const Matrix scaled = a.asDiagonal() * N * b.asDiagonal();
    const auto P = normalize(ContingencyTable(N));
    const auto Q = normalize(ContingencyTable(scaled));
    // Uniform weights do not depend on the table, so the comparison is like for like.
    const auto w = uniform_weights(5, 4);
    CHECK(max_abs_diff(log_interaction(P, w).tau(), log_interaction(Q, w).tau()) < 1e-10);
  }
}

TEST_CASE("additive centering") {
  std::mt19937_64 rng(15);
  const Vector a = testing::random_scales(rng, 4, -3.0, 3.0);
  const Vector b = testing::random_scales(rng, 6, -3.0, 3.0);
  Matrix Y = a.replicate(1, 6) + b.transpose().replicate(4, 1);
  const auto w = uniform_weights(4, 6);
  CHECK(additive_center(Y, w.row_weights, w.col_weights).cwiseAbs().maxCoeff() < 1e-14);

  const auto P = random_P(rng, 4, 6);
  CHECK(max_abs_diff(additive_center(P.p().array().log().matrix(), w.row_weights, w.col_weights),
                     log_interaction(P, w).tau()) < 1e-14);

  // Uniform centering of P subtracts exactly the additive fit c_j/I + r_i/J - 1/(IJ).
  const auto Z = normalize(indicator(ContingencyTable(mat(3, 4, {0, 1, 3, 2, 5, 0, 1, 1, 2, 2, 0, 4}))));
  Matrix fit(3, 4);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) fit(i, j) = Z.c()(j) / 3.0 + Z.r()(i) / 4.0 - 1.0 / 12.0;
  const auto u = uniform_weights(3, 4);
  CHECK(max_abs_diff(additive_center(Z.p(), u.row_weights, u.col_weights), Z.p() - fit) < 1e-15);

  const Matrix R = testing::random_counts(rng, 5, 5);
  const auto m = make_weights(WeightKind::Marginal, normalize(ContingencyTable(R)));
  const Matrix C = additive_center(R, m.row_weights, m.col_weights);
  CHECK(weighted_defect(C, m.row_weights, m.col_weights) < 1e-12);
  Eigen::JacobiSVD<Matrix> before(R), after(C);
  const auto rank = [](const Eigen::JacobiSVD<Matrix>& s) {
    return (s.singularValues().array() > 1e-10 * s.singularValues()(0)).count();
  };
  CHECK(rank(after) >= rank(before) - 2);
  CHECK(rank(after) <= rank(before));
}

TEST_CASE("multiplicative centering") {
  std::mt19937_64 rng(16);
  const auto P = random_P(rng, 4, 5);
  const Matrix dm = density(P, P.r(), P.c());
  CHECK(max_abs_diff(multiplicative_center(dm, P.r(), P.c()), pearson_contrast(P).tau()) < 1e-13);
  CHECK(max_abs_diff(additive_center(dm, P.r(), P.c()), pearson_contrast(P).tau()) < 1e-13);

  const auto u = uniform_weights(4, 5);
  const Matrix du = density(P, u.row_weights, u.col_weights);
  CHECK(max_abs_diff(multiplicative_center(du, u.row_weights, u.col_weights),
                     20.0 * cross_covariance(P)) < 1e-13);

  const Vector a = testing::random_scales(rng, 4), b = testing::random_scales(rng, 5);
  const Matrix rank1 = a * b.transpose();
  CHECK(multiplicative_center(rank1, u.row_weights, u.col_weights).cwiseAbs().maxCoeff() < 1e-13);

  const Matrix Y = testing::random_counts(rng, 4, 5);
  const Matrix T = multiplicative_center(Y, u.row_weights, u.col_weights);
  CHECK(weighted_defect(T, u.row_weights, u.col_weights) < 1e-12);
  Eigen::JacobiSVD<Matrix> sy(Y), st(T);
  const auto rank = [](const Eigen::JacobiSVD<Matrix>& s) {
    return (s.singularValues().array() > 1e-10 * s.singularValues()(0)).count();
  };
  CHECK(rank(st) == rank(sy) - 1);

  CHECK_THROWS_AS(multiplicative_center(mat(2, 2, {1, -1, -1, 1}), Vector::Constant(2, 0.5),
                                        Vector::Constant(2, 0.5)),
                  ZeroGrandMean);
}

TEST_CASE("first order approximation") {
  std::mt19937_64 rng(17);
  const Vector r = testing::random_scales(rng, 3, 1.0, 4.0).normalized().cwiseAbs2();
  const Vector c = testing::random_scales(rng, 4, 1.0, 4.0).normalized().cwiseAbs2();
  const auto Pi = normalize(ContingencyTable(r * c.transpose()));
  const auto mw = make_weights(WeightKind::Marginal, Pi);
  CHECK(first_order_approx(Pi, mw).cwiseAbs().maxCoeff() < 1e-13);

  const auto P = random_P(rng, 3, 4);
  Matrix expected(3, 4);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 4; ++j)
      expected(i, j) = 12.0 * P.p()(i, j) + 1.0 - 3.0 * P.r()(i) - 4.0 * P.c()(j);
  CHECK(max_abs_diff(first_order_approx(P, uniform_weights(3, 4)), expected) < 1e-14);
}

TEST_CASE("first order approximation error is linear in alpha") {
  // Scaled by 1/alpha, the distance from lambda(P) shrinks tenfold per decade of alpha.
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    const ContingencyTable N(testing::random_counts(rng, 6, 5));
    const auto u = uniform_weights(6, 5);
    const Matrix lambda = log_interaction(normalize(N), u).tau();
    const auto err = [&](double alpha) {
      const auto Pa = normalize(power_transform(N, alpha));
      return max_abs_diff(first_order_approx(Pa, u) / alpha, lambda);
    };
    const double ratio = err(1e-3) / err(1e-4);
    CHECK(ratio > 8.0);
    CHECK(ratio < 12.0);
  }
}

TEST_CASE("independence, homogeneity and null association coincide") {
  std::mt19937_64 rng(19);
  const auto Pi = independent_P(rng, 4, 4);
  const auto w = make_weights(WeightKind::Marginal, Pi);
  CHECK(cross_covariance(Pi).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(pearson_contrast(Pi).tau().cwiseAbs().maxCoeff() < 1e-14);
  CHECK(log_interaction(Pi, w).tau().cwiseAbs().maxCoeff() < 1e-14);

  const auto P = random_P(rng, 4, 4);
  CHECK(cross_covariance(P).cwiseAbs().maxCoeff() > 1e-6);
  CHECK(pearson_contrast(P).tau().cwiseAbs().maxCoeff() > 1e-6);
  CHECK(log_interaction(P, w).tau().cwiseAbs().maxCoeff() > 1e-6);

  // Geometric means of rows follow the row masses under independence.
  const Matrix G = Pi.p().array().log().matrix();
  Vector gm = (G * w.col_weights).array().exp().matrix();
  gm /= gm.sum();
  CHECK(max_abs_diff(gm, Pi.r()) < 1e-10);
}

TEST_CASE("every interaction index is double centered") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 10; ++trial) {
    const auto P = random_P(rng, 5, 3);
    const auto u = uniform_weights(5, 3);
    const auto m = make_weights(WeightKind::Marginal, P);
    const Triplet c = covariance_residuals(P);
    const Triplet d = pearson_contrast(P);
    const Triplet l = log_interaction(P, m);
    CHECK(weighted_defect(c.tau(), u.row_weights, u.col_weights) < 1e-10);
    CHECK(weighted_defect(d.tau(), P.r(), P.c()) < 1e-10);
    CHECK(weighted_defect(l.tau(), m.row_weights, m.col_weights) < 1e-10);
    const Matrix Y = testing::random_counts(rng, 5, 3);
    CHECK(weighted_defect(multiplicative_center(Y, m.row_weights, m.col_weights), m.row_weights,
                          m.col_weights) < 1e-10);
    CHECK(weighted_defect(additive_center(Y, m.row_weights, m.col_weights), m.row_weights,
                          m.col_weights) < 1e-10);
  }
}

TEST_CASE("triplet validation") {
  const Vector h = Vector::Constant(2, 0.5);
  CHECK_THROWS_AS(Triplet(mat(2, 2, {1, 0, 0, 1}), h, h, IndexKind::Covariance), NotCentered);
  CHECK_THROWS_AS(Triplet(mat(2, 2, {1, -1, -1, 1}), Vector::Ones(3) / 3.0, h,
                          IndexKind::Covariance),
                  DimensionMismatch);
  Vector bad(2);
  bad << 1.0, 0.0;
  CHECK_THROWS_AS(Triplet(mat(2, 2, {1, -1, -1, 1}), bad, h, IndexKind::Covariance),
                  NonPositiveWeight);
  const Triplet ok(mat(2, 2, {1, -1, -1, 1}), h, h, IndexKind::Covariance);
  CHECK(max_abs_diff(ok.cross_covariance(), mat(2, 2, {1, -1, -1, 1}) / 4.0) < 1e-16);
}
