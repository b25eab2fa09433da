#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powerca/tolerances.hpp"

namespace powerca {

enum class IndexKind {
  Covariance,
  PearsonContrast,
  LogInteraction,
  AdditiveCentered,
  MultiplicativeCentered,
};

const char* to_string(IndexKind kind);

// An interaction matrix tau with its row and column metrics (m^r, m^c).
// Construction verifies the weighted double centering
//   sum_i m^r_i m^c_j tau_ij = 0 and sum_j m^r_i m^c_j tau_ij = 0
// to within tol.centering * max|tau|. A tau below tol.zero_interaction passes as zero.
class Triplet {
public:
  Triplet(Matrix tau, Vector row_metric, Vector col_metric, IndexKind kind,
          const Tolerances& tol = kDefaultTolerances);

  const Matrix& tau() const { return tau_; }
  const Vector& row_metric() const { return row_metric_; }
  const Vector& col_metric() const { return col_metric_; }
  IndexKind kind() const { return kind_; }
  Eigen::Index rows() const { return tau_.rows(); }
  Eigen::Index cols() const { return tau_.cols(); }

  // S_ij = m^r_i m^c_j tau_ij.
  Matrix cross_covariance() const;

private:
  Matrix tau_;
  Vector row_metric_;
  Vector col_metric_;
  IndexKind kind_;
};

// Largest weighted row or column sum of tau, divided by max|tau|.
double centering_defect(const Matrix& tau, const Vector& row_metric, const Vector& col_metric);

using SignVector = Eigen::VectorXd;

// One principal dimension. u (length J) and v (length I) are set for taxicab axes.
struct Axis {
  Vector f;
  Vector g;
  double delta = 0.0;
  std::optional<SignVector> u;
  std::optional<SignVector> v;
};

enum class Method { Svd, Taxicab };

const char* to_string(Method method);

struct Decomposition {
  Decomposition(Method m, Triplet t) : method(m), source(std::move(t)) {}

  std::vector<Axis> axes;
  Method method = Method::Svd;
  Triplet source;
  // max|tau - reconstruction with all returned axes|
  double residual_norm = 0.0;
  // Denominator for percentages: total inertia (svd) or summed dispersions (taxicab).
  double total_dispersion = 0.0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  std::size_t size() const { return axes.size(); }
  // delta_k (svd: squared) as a percentage of total_dispersion.
  double percent(std::size_t axis) const;
};

// Flip the axis so that the largest-|f| entry is positive (lowest index among near ties).
void canonicalize_sign(Axis& axis, const Tolerances& tol = kDefaultTolerances);

}  // namespace powerca
