#include "powerca/triplet.hpp"

#include <cmath>

#include "powerca/errors.hpp"

namespace powerca {

const char* to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::Covariance: return "covariance";
    case IndexKind::PearsonContrast: return "pearson_contrast";
    case IndexKind::LogInteraction: return "log_interaction";
    case IndexKind::AdditiveCentered: return "additive_centered";
    case IndexKind::MultiplicativeCentered: return "multiplicative_centered";
  }
  return "?";
}

const char* to_string(Method method) { return method == Method::Svd ? "svd" : "taxicab"; }

double centering_defect(const Matrix& tau, const Vector& row_metric, const Vector& col_metric) {
  const double scale = tau.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  const Matrix S = row_metric.asDiagonal() * tau * col_metric.asDiagonal();
  const double rows = S.rowwise().sum().cwiseAbs().maxCoeff();
  const double cols = S.colwise().sum().cwiseAbs().maxCoeff();
  return std::max(rows, cols) / scale;
}

Triplet::Triplet(Matrix tau, Vector row_metric, Vector col_metric, IndexKind kind,
                 const Tolerances& tol)
    : tau_(std::move(tau)),
      row_metric_(std::move(row_metric)),
      col_metric_(std::move(col_metric)),
      kind_(kind) {
  if (row_metric_.size() != tau_.rows() || col_metric_.size() != tau_.cols())
    throw DimensionMismatch("metric lengths do not match the interaction matrix");
  if ((row_metric_.array() <= 0.0).any() || (col_metric_.array() <= 0.0).any())
    throw NonPositiveWeight("triplet metrics must be strictly positive");
  if (!tau_.allFinite()) throw InvalidArgument("interaction matrix has non-finite entries");
  // A numerically zero tau (independence up to rounding) has no meaningful relative defect.
  const double defect = tau_.cwiseAbs().maxCoeff() <= tol.zero_interaction
                            ? 0.0
                            : centering_defect(tau_, row_metric_, col_metric_);
  if (defect > tol.centering)
    throw NotCentered(std::string(to_string(kind_)) +
                      " interaction is not double centered (defect " + std::to_string(defect) +
                      ")");
}

Matrix Triplet::cross_covariance() const {
  return row_metric_.asDiagonal() * tau_ * col_metric_.asDiagonal();
}

double Decomposition::percent(std::size_t axis) const {
  if (axis >= axes.size() || total_dispersion <= 0.0) return 0.0;
  const double d = axes[axis].delta;
  const double part = method == Method::Svd ? d * d : d;
  return 100.0 * part / total_dispersion;
}

void canonicalize_sign(Axis& axis, const Tolerances& tol) {
  if (axis.f.size() == 0) return;
  const double top = axis.f.cwiseAbs().maxCoeff();
  Eigen::Index pick = 0;
  for (Eigen::Index i = 0; i < axis.f.size(); ++i) {
    if (std::abs(axis.f(i)) >= top * (1.0 - tol.sign_tie)) {
      pick = i;
      break;
    }
  }
  if (axis.f(pick) >= 0.0) return;
  axis.f = -axis.f;
  axis.g = -axis.g;
  // Taxicab sign vectors sit at a fixed point u = sign(g), v = sign(f); recompute
  // rather than negate so that sign(0) stays +1.
  const auto sign_of = [](const Vector& x) {
    return SignVector(x.unaryExpr([](double t) { return t < 0.0 ? -1.0 : 1.0; }));
  };
  if (axis.u) axis.u = sign_of(axis.g);
  if (axis.v) axis.v = sign_of(axis.f);
}

}  // namespace powerca
