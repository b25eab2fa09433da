#include "powerca/interaction.hpp"

#include <cmath>

#include "powerca/errors.hpp"

namespace powerca {

namespace {

void check_weights(const Matrix& Y, const Vector& row_weights, const Vector& col_weights) {
  if (row_weights.size() != Y.rows() || col_weights.size() != Y.cols())
    throw DimensionMismatch("weight lengths do not match the matrix");
}

}  // namespace

Matrix cross_covariance(const CorrespondenceMatrix& P) {
  return P.p() - P.r() * P.c().transpose();
}

Triplet covariance_residuals(const CorrespondenceMatrix& P, const Tolerances& tol) {
  const auto I = static_cast<double>(P.rows());
  const auto J = static_cast<double>(P.cols());
  const WeightScheme u = uniform_weights(P.rows(), P.cols());
  return Triplet(I * J * cross_covariance(P), u.row_weights, u.col_weights,
                 IndexKind::Covariance, tol);
}

Triplet pearson_contrast(const CorrespondenceMatrix& P, const Tolerances& tol) {
  Matrix delta = density(P, P.r(), P.c()).array() - 1.0;
  return Triplet(std::move(delta), P.r(), P.c(), IndexKind::PearsonContrast, tol);
}

Triplet log_interaction(const CorrespondenceMatrix& P, const WeightScheme& w,
                        const Tolerances& tol) {
  const Matrix& p = P.p();
  for (Eigen::Index j = 0; j < p.cols(); ++j)
    for (Eigen::Index i = 0; i < p.rows(); ++i)
      if (!(p(i, j) > 0.0))
        throw NonPositiveCell(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  const Matrix G = p.array().log().matrix();
  return Triplet(additive_center(G, w.row_weights, w.col_weights), w.row_weights, w.col_weights,
                 IndexKind::LogInteraction, tol);
}

Matrix additive_center(const Matrix& Y, const Vector& row_weights, const Vector& col_weights) {
  check_weights(Y, row_weights, col_weights);
  const Vector row_means = Y * col_weights;                 // Y_i+
  const Vector col_means = Y.transpose() * row_weights;     // Y_+j
  const double grand = row_weights.dot(row_means);          // Y_++
  Matrix out = Y;
  out.colwise() -= row_means;
  out.rowwise() -= col_means.transpose();
  out.array() += grand;
  return out;
}

Matrix multiplicative_center(const Matrix& Y, const Vector& row_weights,
                             const Vector& col_weights, const Tolerances& tol) {
  check_weights(Y, row_weights, col_weights);
  const Vector row_means = Y * col_weights;
  const Vector col_means = Y.transpose() * row_weights;
  const double grand = row_weights.dot(row_means);
  const double scale = Y.cwiseAbs().maxCoeff();
  if (!(std::abs(grand) > tol.zero_interaction * std::max(scale, 1.0)))
    throw ZeroGrandMean("weighted grand mean is zero; multiplicative centering undefined");
  return Y - row_means * col_means.transpose() / grand;
}

Matrix density(const CorrespondenceMatrix& P, const Vector& row_weights,
               const Vector& col_weights) {
  check_weights(P.p(), row_weights, col_weights);
  return row_weights.cwiseInverse().asDiagonal() * P.p() * col_weights.cwiseInverse().asDiagonal();
}

Matrix first_order_approx(const CorrespondenceMatrix& P, const WeightScheme& w) {
  Matrix out = density(P, w.row_weights, w.col_weights);
  out.colwise() -= P.r().cwiseQuotient(w.row_weights);
  out.rowwise() -= P.c().cwiseQuotient(w.col_weights).transpose();
  out.array() += 1.0;
  return out;
}

}  // namespace powerca
