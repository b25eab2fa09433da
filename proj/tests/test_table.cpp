#include <doctest.h>

#include "powerca/errors.hpp"
#include "powerca/table.hpp"
#include "test_support.hpp"

using namespace powerca;
using doctest::Approx;

TEST_CASE("table validation") {
  CHECK_THROWS_AS(ContingencyTable(Matrix::Ones(1, 3)), InvalidTable);
  CHECK_THROWS_AS(ContingencyTable(Matrix::Zero(2, 2)), InvalidTable);
  Matrix neg = Matrix::Ones(2, 2);
  neg(1, 0) = -1.0;
  CHECK_THROWS_AS(ContingencyTable{neg}, NegativeEntry);
  Matrix nan = Matrix::Ones(2, 2);
  nan(0, 1) = std::nan("");
  CHECK_THROWS_AS(ContingencyTable{nan}, InvalidTable);
  CHECK_THROWS_AS(ContingencyTable(Matrix::Ones(2, 2), {"a"}), InvalidTable);

  const ContingencyTable t(Matrix::Ones(2, 3));
  CHECK(t.row_labels() == std::vector<std::string>{"R1", "R2"});
  CHECK(t.col_labels() == std::vector<std::string>{"C1", "C2", "C3"});
}

TEST_CASE("normalize") {
  const auto P = normalize(ContingencyTable(Matrix::Ones(2, 2)));
  CHECK(P.p().isApprox(Matrix::Constant(2, 2, 0.25)));
  CHECK(P.r().isApprox(Vector::Constant(2, 0.5)));
  CHECK(P.c().isApprox(Vector::Constant(2, 0.5)));
  CHECK(P.n() == 4.0);

  Matrix R(2, 2);
  R << 0, 25, 11, 275;
  const auto Q = normalize(ContingencyTable(R));
  CHECK(Q.n() == 311.0);
  CHECK(Q.p()(0, 0) == 0.0);
  CHECK(Q.p()(0, 1) == Approx(25.0 / 311.0).epsilon(1e-15));
  CHECK(Q.p()(1, 0) == Approx(11.0 / 311.0).epsilon(1e-15));
  CHECK(Q.p()(1, 1) == Approx(275.0 / 311.0).epsilon(1e-15));
  CHECK(Q.r().sum() == Approx(1.0));

  Matrix empty_row(3, 2);
  empty_row << 1, 2, 0, 0, 3, 4;
  try {
    normalize(ContingencyTable(empty_row));
    FAIL("expected ZeroMarginal");
  } catch (const ZeroMarginal& e) {
    CHECK(e.index() == 1);
    CHECK(e.margin() == Margin::Row);
  }
  Matrix empty_col(2, 3);
  empty_col << 1, 0, 2, 3, 0, 4;
  CHECK_THROWS_AS(normalize(ContingencyTable(empty_col)), ZeroMarginal);
}

TEST_CASE("normalize is scale free") {
  std::mt19937_64 rng(7);
  const Matrix N = testing::random_counts(rng, 4, 6);
  const auto a = normalize(ContingencyTable(N));
  const auto b = normalize(ContingencyTable(N * 37.5));
  CHECK(testing::max_abs_diff(a.p(), b.p()) < 1e-15);
}

TEST_CASE("from_probabilities") {
  Matrix p(2, 2);
  p << 0.1, 0.2, 0.3, 0.4;
  const auto P = CorrespondenceMatrix::from_probabilities(p);
  CHECK(P.r()(1) == Approx(0.7));
  CHECK_THROWS_AS(CorrespondenceMatrix::from_probabilities(p * 2.0), InvalidTable);
}

TEST_CASE("weights") {
  std::mt19937_64 rng(1);
  const auto P = normalize(ContingencyTable(testing::random_counts(rng, 3, 4)));
  const auto u = make_weights(WeightKind::Uniform, P);
  CHECK(u.row_weights.isApprox(Vector::Constant(3, 1.0 / 3.0)));
  CHECK(u.col_weights.isApprox(Vector::Constant(4, 0.25)));

  Matrix N(2, 2);
  N << 1, 1, 1, 3;
  const auto m = make_weights(WeightKind::Marginal, normalize(ContingencyTable(N)));
  CHECK(m.row_weights(0) == Approx(1.0 / 3.0));
  CHECK(m.row_weights(1) == Approx(2.0 / 3.0));
  CHECK(m.col_weights(0) == Approx(1.0 / 3.0));
  CHECK(m.col_weights(1) == Approx(2.0 / 3.0));

  const auto P2 = normalize(ContingencyTable(N));
  Vector rows(2), cols(2);
  rows << 2.0 / 3.0, 1.0 / 3.0;
  cols << 0.5, 0.5;
  const auto c = make_weights(WeightKind::Custom, P2, CustomWeights{rows, cols});
  CHECK(c.kind == WeightKind::Custom);
  CHECK(c.row_weights == rows);
  CHECK(c.col_weights == cols);

  Vector bad(2);
  bad << 0.0, 1.0;
  CHECK_THROWS_AS(make_weights(WeightKind::Custom, P2, CustomWeights{bad, cols}),
                  NonPositiveWeight);
  Vector unnormalized(2);
  unnormalized << 1.0, 1.0;
  CHECK_THROWS_AS(make_weights(WeightKind::Custom, P2, CustomWeights{unnormalized, cols}),
                  InvalidArgument);
  CHECK_THROWS_AS(make_weights(WeightKind::Custom, P2, CustomWeights{Vector::Ones(3) / 3.0, cols}),
                  DimensionMismatch);
  CHECK_THROWS_AS(make_weights(WeightKind::Custom, P2), InvalidArgument);
}
