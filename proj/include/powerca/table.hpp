#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powerca/tolerances.hpp"

namespace powerca {

// A labeled nonnegative I x J table (counts or compositions), I, J >= 2.
class ContingencyTable {
public:
  // Labels default to R1..RI and C1..CJ when empty.
  explicit ContingencyTable(Matrix values, std::vector<std::string> row_labels = {},
                            std::vector<std::string> col_labels = {});

  const Matrix& values() const { return values_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  Eigen::Index rows() const { return values_.rows(); }
  Eigen::Index cols() const { return values_.cols(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return values_(i, j); }

private:
  Matrix values_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Generated labels "R1".."Rn" (or with another prefix).
std::vector<std::string> default_labels(const std::string& prefix, Eigen::Index n);

// Probability table P = N / n with its marginals r and c.
class CorrespondenceMatrix {
public:
  const Matrix& p() const { return p_; }
  const Vector& r() const { return r_; }
  const Vector& c() const { return c_; }
  double n() const { return n_; }
  Eigen::Index rows() const { return p_.rows(); }
  Eigen::Index cols() const { return p_.cols(); }

  // Builds from an already normalized matrix; checks the sum and positive marginals.
  static CorrespondenceMatrix from_probabilities(Matrix p, double grand_total = 1.0,
                                                 const Tolerances& tol = kDefaultTolerances);

private:
  friend CorrespondenceMatrix normalize(const ContingencyTable&);
  CorrespondenceMatrix(Matrix p, double n);

  Matrix p_;
  Vector r_;
  Vector c_;
  double n_;
};

// Throws ZeroMarginal if any row or column sums to zero.
CorrespondenceMatrix normalize(const ContingencyTable& table);

enum class WeightKind { Marginal, Uniform, Custom };

struct WeightScheme {
  WeightKind kind;
  Vector row_weights;
  Vector col_weights;
};

struct CustomWeights {
  Vector rows;
  Vector cols;
};

// Custom weights must be strictly positive and sum to one per margin.
WeightScheme make_weights(WeightKind kind, const CorrespondenceMatrix& P,
                          const std::optional<CustomWeights>& custom = std::nullopt,
                          const Tolerances& tol = kDefaultTolerances);

WeightScheme uniform_weights(Eigen::Index rows, Eigen::Index cols);

const char* to_string(WeightKind kind);

}  // namespace powerca
