#include <algorithm>
#include <cmath>

#include "powerca/decomp.hpp"
#include "powerca/errors.hpp"

namespace powerca {

namespace detail {

std::size_t axis_limit(const Triplet& t, std::size_t k) {
  const auto cap = static_cast<std::size_t>(std::min(t.rows(), t.cols()) - 1);
  if (k == kAllAxes) return cap;
  if (k > cap)
    throw InvalidArgument("requested " + std::to_string(k) + " axes but at most " +
                          std::to_string(cap) + " exist for a " + std::to_string(t.rows()) +
                          "x" + std::to_string(t.cols()) + " table");
  return k;
}

double residual_norm(const Decomposition& d) {
  return (d.source.tau() - reconstruct(d, d.axes.size())).cwiseAbs().maxCoeff();
}

}  // namespace detail

Decomposition weighted_svd(const Triplet& t, std::size_t k, const Tolerances& tol) {
  const std::size_t limit = detail::axis_limit(t, k);
  Decomposition d(Method::Svd, t);

  const Vector sqrt_r = t.row_metric().cwiseSqrt();
  const Vector sqrt_c = t.col_metric().cwiseSqrt();
  // D_r^(1/2) tau D_c^(1/2): the weighted conditions become plain orthonormality.
  const Matrix A = sqrt_r.asDiagonal() * t.tau() * sqrt_c.asDiagonal();
  d.total_dispersion = A.squaredNorm();

  if (t.tau().cwiseAbs().maxCoeff() > tol.zero_interaction && limit > 0) {
    Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& sv = svd.singularValues();
    const double first = sv(0);
    const Vector inv_sqrt_r = sqrt_r.cwiseInverse();
    const Vector inv_sqrt_c = sqrt_c.cwiseInverse();
    for (Eigen::Index a = 0; a < sv.size() && d.axes.size() < limit; ++a) {
      if (!(sv(a) > tol.rank_cutoff * first)) break;
      Axis axis;
      axis.delta = sv(a);
      axis.f = inv_sqrt_r.cwiseProduct(svd.matrixU().col(a)) * sv(a);
      axis.g = inv_sqrt_c.cwiseProduct(svd.matrixV().col(a)) * sv(a);
      canonicalize_sign(axis, tol);
      d.axes.push_back(std::move(axis));
    }
  }
  d.residual_norm = detail::residual_norm(d);
  return d;
}

Matrix reconstruct(const Decomposition& d, std::size_t k) {
  if (k > d.axes.size())
    throw InvalidArgument("reconstruction with " + std::to_string(k) + " axes but only " +
                          std::to_string(d.axes.size()) + " available");
  Matrix out = Matrix::Zero(d.source.rows(), d.source.cols());
  for (std::size_t a = 0; a < k; ++a) {
    const Axis& axis = d.axes[a];
    out.noalias() += axis.f * axis.g.transpose() / axis.delta;
  }
  return out;
}

namespace {

void check_source(const CorrespondenceMatrix& P, const Decomposition& d, IndexKind expected) {
  if (d.source.kind() != expected)
    throw MismatchedSource(std::string("decomposition was built from a ") +
                           to_string(d.source.kind()) + " triplet, expected " +
                           to_string(expected));
  if (d.source.rows() != P.rows() || d.source.cols() != P.cols())
    throw DimensionMismatch("decomposition and probability table differ in size");
}

}  // namespace

Matrix ca_reconstruct(const CorrespondenceMatrix& P, const Decomposition& d, std::size_t k) {
  check_source(P, d, IndexKind::PearsonContrast);
  Matrix core = reconstruct(d, k).array() + 1.0;
  return P.r().asDiagonal() * core * P.c().asDiagonal();
}

Matrix lra_reconstruct(const CorrespondenceMatrix& P, const Decomposition& d, std::size_t k) {
  check_source(P, d, IndexKind::AdditiveCentered);
  const auto I = static_cast<double>(P.rows());
  const auto J = static_cast<double>(P.cols());
  Matrix out = reconstruct(d, k);
  out.rowwise() += (P.c() / I).transpose();
  out.colwise() += P.r() / J;
  out.array() -= 1.0 / (I * J);
  return out;
}

double ConditionReport::worst() const {
  return std::max({dispersion, centering, orthogonality, reconstruction});
}

ConditionReport check_conditions(const Decomposition& d) {
  ConditionReport rep;
  const double tau_scale = d.source.tau().cwiseAbs().maxCoeff();
  rep.reconstruction = d.residual_norm / (tau_scale > 0.0 ? tau_scale : 1.0);
  if (d.axes.empty()) return rep;

  const Vector& mr = d.source.row_metric();
  const Vector& mc = d.source.col_metric();
  const double d1 = d.axes.front().delta;
  const auto sign_of = [](const Vector& x) {
    return Vector(x.unaryExpr([](double t) { return t < 0.0 ? -1.0 : 1.0; }));
  };

  for (std::size_t a = 0; a < d.axes.size(); ++a) {
    const Axis& x = d.axes[a];
    if (d.method == Method::Svd) {
      const double dd = x.delta * x.delta;
      rep.dispersion = std::max({rep.dispersion,
                                 std::abs(dd - x.f.cwiseAbs2().dot(mr)) / (d1 * d1),
                                 std::abs(dd - x.g.cwiseAbs2().dot(mc)) / (d1 * d1)});
    } else {
      rep.dispersion = std::max({rep.dispersion, std::abs(x.delta - x.f.cwiseAbs().dot(mr)) / d1,
                                 std::abs(x.delta - x.g.cwiseAbs().dot(mc)) / d1});
    }
    rep.centering = std::max({rep.centering, std::abs(x.f.dot(mr)) / d1,
                              std::abs(x.g.dot(mc)) / d1});
    for (std::size_t b = 0; b < a; ++b) {
      const Axis& y = d.axes[b];
      if (d.method == Method::Svd) {
        rep.orthogonality =
            std::max({rep.orthogonality, std::abs(x.f.cwiseProduct(y.f).dot(mr)) / (d1 * d1),
                      std::abs(x.g.cwiseProduct(y.g).dot(mc)) / (d1 * d1)});
      } else {
        rep.orthogonality =
            std::max({rep.orthogonality, std::abs(x.f.cwiseProduct(sign_of(y.f)).dot(mr)) / d1,
                      std::abs(x.g.cwiseProduct(sign_of(y.g)).dot(mc)) / d1});
      }
    }
  }
  return rep;
}

}  // namespace powerca
