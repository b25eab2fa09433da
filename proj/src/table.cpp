#include "powerca/table.hpp"

#include <cmath>

#include "powerca/errors.hpp"

namespace powerca {

std::vector<std::string> default_labels(const std::string& prefix, Eigen::Index n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return labels;
}

ContingencyTable::ContingencyTable(Matrix values, std::vector<std::string> row_labels,
                                   std::vector<std::string> col_labels)
    : values_(std::move(values)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (values_.rows() < 2 || values_.cols() < 2)
    throw InvalidTable("table must be at least 2x2, got " + std::to_string(values_.rows()) +
                       "x" + std::to_string(values_.cols()));
  bool any_positive = false;
  for (Eigen::Index j = 0; j < values_.cols(); ++j) {
    for (Eigen::Index i = 0; i < values_.rows(); ++i) {
      const double x = values_(i, j);
      if (!std::isfinite(x))
        throw InvalidTable("non-finite entry at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
      if (x < 0.0) throw NegativeEntry(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      any_positive = any_positive || x > 0.0;
    }
  }
  if (!any_positive) throw InvalidTable("table has no positive entry");

  if (row_labels_.empty()) row_labels_ = default_labels("R", values_.rows());
  if (col_labels_.empty()) col_labels_ = default_labels("C", values_.cols());
  if (static_cast<Eigen::Index>(row_labels_.size()) != values_.rows() ||
      static_cast<Eigen::Index>(col_labels_.size()) != values_.cols())
    throw InvalidTable("label count does not match table dimensions");
}

CorrespondenceMatrix::CorrespondenceMatrix(Matrix p, double n)
    : p_(std::move(p)), r_(p_.rowwise().sum()), c_(p_.colwise().sum().transpose()), n_(n) {}

CorrespondenceMatrix normalize(const ContingencyTable& table) {
  const Matrix& N = table.values();
  const Vector row_sums = N.rowwise().sum();
  const Vector col_sums = N.colwise().sum().transpose();
  for (Eigen::Index i = 0; i < row_sums.size(); ++i)
    if (!(row_sums(i) > 0.0)) throw ZeroMarginal(static_cast<std::size_t>(i), Margin::Row);
  for (Eigen::Index j = 0; j < col_sums.size(); ++j)
    if (!(col_sums(j) > 0.0)) throw ZeroMarginal(static_cast<std::size_t>(j), Margin::Column);
  const double n = N.sum();
  return CorrespondenceMatrix(N / n, n);
}

CorrespondenceMatrix CorrespondenceMatrix::from_probabilities(Matrix p, double grand_total,
                                                              const Tolerances& tol) {
  if (p.rows() < 2 || p.cols() < 2) throw InvalidTable("probability table must be at least 2x2");
  if ((p.array() < 0.0).any()) throw InvalidTable("negative probability");
  if (std::abs(p.sum() - 1.0) > tol.probability_sum)
    throw InvalidTable("probabilities do not sum to 1");
  CorrespondenceMatrix P(std::move(p), grand_total);
  for (Eigen::Index i = 0; i < P.r_.size(); ++i)
    if (!(P.r_(i) > 0.0)) throw ZeroMarginal(static_cast<std::size_t>(i), Margin::Row);
  for (Eigen::Index j = 0; j < P.c_.size(); ++j)
    if (!(P.c_(j) > 0.0)) throw ZeroMarginal(static_cast<std::size_t>(j), Margin::Column);
  return P;
}

WeightScheme uniform_weights(Eigen::Index rows, Eigen::Index cols) {
  return {WeightKind::Uniform, Vector::Constant(rows, 1.0 / static_cast<double>(rows)),
          Vector::Constant(cols, 1.0 / static_cast<double>(cols))};
}

namespace {

void check_weight_vector(const Vector& w, Eigen::Index expected, const char* margin,
                         const Tolerances& tol) {
  if (w.size() != expected)
    throw DimensionMismatch(std::string(margin) + " weights have length " +
                            std::to_string(w.size()) + ", expected " + std::to_string(expected));
  for (Eigen::Index k = 0; k < w.size(); ++k)
    if (!(w(k) > 0.0))
      throw NonPositiveWeight(std::string(margin) + " weight " + std::to_string(k) +
                              " is not strictly positive");
  if (std::abs(w.sum() - 1.0) > tol.probability_sum)
    throw InvalidArgument(std::string(margin) + " weights must sum to 1");
}

}  // namespace

WeightScheme make_weights(WeightKind kind, const CorrespondenceMatrix& P,
                          const std::optional<CustomWeights>& custom, const Tolerances& tol) {
  switch (kind) {
    case WeightKind::Uniform:
      return uniform_weights(P.rows(), P.cols());
    case WeightKind::Marginal:
      return {WeightKind::Marginal, P.r(), P.c()};
    case WeightKind::Custom:
      if (!custom) throw InvalidArgument("custom weights requested but none supplied");
      check_weight_vector(custom->rows, P.rows(), "row", tol);
      check_weight_vector(custom->cols, P.cols(), "column", tol);
      return {WeightKind::Custom, custom->rows, custom->cols};
  }
  throw InvalidArgument("unknown weight kind");
}

const char* to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Marginal: return "marginal";
    case WeightKind::Uniform: return "uniform";
    case WeightKind::Custom: return "custom";
  }
  return "?";
}

}  // namespace powerca
