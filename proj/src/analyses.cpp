#include "powerca/analyses.hpp"

#include <cmath>

#include "powerca/errors.hpp"
#include "powerca/interaction.hpp"
#include "powerca/transform.hpp"

namespace powerca {

namespace {

Decomposition labeled(Decomposition d, const ContingencyTable& N) {
  d.row_labels = N.row_labels();
  d.col_labels = N.col_labels();
  return d;
}

void require_positive(const Matrix& V) {
  for (Eigen::Index j = 0; j < V.cols(); ++j)
    for (Eigen::Index i = 0; i < V.rows(); ++i)
      if (!(V(i, j) > 0.0))
        throw NonPositiveCell(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

}  // namespace

Decomposition factorize(const Triplet& t, const FactorOptions& opts, const Tolerances& tol) {
  if (opts.method == Method::Svd) return weighted_svd(t, opts.k, tol);
  return taxicab_svd(t, opts.k, opts.algorithm, tol);
}

Decomposition ca(const ContingencyTable& N, std::size_t k, const Tolerances& tol) {
  return labeled(weighted_svd(pearson_contrast(normalize(N), tol), k, tol), N);
}

Decomposition tca(const ContingencyTable& N, std::size_t k, TaxicabAlgorithm algorithm,
                  const Tolerances& tol) {
  return labeled(taxicab_svd(pearson_contrast(normalize(N), tol), k, algorithm, tol), N);
}

Decomposition lra(const ContingencyTable& N, WeightKind weights, const FactorOptions& opts,
                  const Tolerances& tol) {
  require_positive(N.values());
  return lra(N, make_weights(weights, normalize(N), std::nullopt, tol), opts, tol);
}

Decomposition lra(const ContingencyTable& N, const WeightScheme& weights,
                  const FactorOptions& opts, const Tolerances& tol) {
  require_positive(N.values());
  return labeled(factorize(log_interaction(normalize(N), weights, tol), opts, tol), N);
}

Decomposition lra_incidence(const ContingencyTable& Z, const FactorOptions& opts,
                            const Tolerances& tol) {
  const Matrix& V = Z.values();
  if (((V.array() != 0.0) && (V.array() != 1.0)).any())
    throw InvalidArgument("incidence LRA needs a 0/1 table");
  // log2(z + 1) = z on {0, 1}; the logarithm is applied literally.
  const Matrix Y = (V.array() + 1.0).log2().matrix();
  const CorrespondenceMatrix P = normalize(ContingencyTable(Y, Z.row_labels(), Z.col_labels()));
  const WeightScheme u = uniform_weights(P.rows(), P.cols());
  Triplet t(additive_center(P.p(), u.row_weights, u.col_weights), u.row_weights, u.col_weights,
            IndexKind::AdditiveCentered, tol);
  return labeled(factorize(t, opts, tol), Z);
}

Decomposition covariance_analysis(const ContingencyTable& N, std::size_t k,
                                  const Tolerances& tol) {
  return labeled(weighted_svd(covariance_residuals(normalize(N), tol), k, tol), N);
}

BalancedTable balance_to_uniform(const CorrespondenceMatrix& P, double tol,
                                 std::size_t max_iter) {
  require_positive(P.p());
  const auto I = static_cast<double>(P.rows());
  const auto J = static_cast<double>(P.cols());
  BalancedTable out;
  out.a = Vector::Ones(P.rows());
  out.b = Vector::Ones(P.cols());

  const auto residual_of = [&](const Matrix& q) {
    const double rows = (q.rowwise().sum().array() - 1.0 / I).abs().maxCoeff();
    const double cols = (q.colwise().sum().array() - 1.0 / J).abs().maxCoeff();
    return std::max(rows, cols);
  };

  Matrix q = P.p();
  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    const Vector row_scale = q.rowwise().sum().cwiseInverse() / I;
    out.a = out.a.cwiseProduct(row_scale);
    q = row_scale.asDiagonal() * q;
    const Vector col_scale = (q.colwise().sum().transpose().cwiseInverse() / J);
    out.b = out.b.cwiseProduct(col_scale);
    q = q * col_scale.asDiagonal();

    out.residual = residual_of(q);
    if (out.residual <= tol) {
      out.iterations = iter;
      out.q = out.a.asDiagonal() * P.p() * out.b.asDiagonal();
      out.residual = residual_of(out.q);
      return out;
    }
  }
  throw NoConvergence(max_iter, out.residual);
}

Decomposition mfca(const ContingencyTable& N, const FactorOptions& opts, const Tolerances& tol) {
  require_positive(N.values());
  const CorrespondenceMatrix P = normalize(N);
  const BalancedTable Q = balance_to_uniform(P, tol.convergence);
  const auto I = static_cast<double>(P.rows());
  const auto J = static_cast<double>(P.cols());
  const WeightScheme u = uniform_weights(P.rows(), P.cols());
  Triplet t((I * J * Q.q).array() - 1.0, u.row_weights, u.col_weights,
            IndexKind::PearsonContrast, tol);
  return labeled(factorize(t, opts, tol), N);
}

namespace {

void check_lemma_args(long m, long rows, long cols) {
  if (rows < 2 || cols < 2) throw InvalidArgument("need I >= 2 and J >= 2");
  if (m < 1 || m > rows - 1) throw BadZeroCount(m, rows);
}

}  // namespace

double lemma2_ca_inertia(long m, long rows, long cols) {
  check_lemma_args(m, rows, cols);
  return static_cast<double>(m) / (static_cast<double>(rows) * static_cast<double>(cols));
}

double lemma2_tca_dispersion(long m, long rows, long cols) {
  check_lemma_args(m, rows, cols);
  const auto I = static_cast<double>(rows);
  const auto J = static_cast<double>(cols);
  const auto z = static_cast<double>(m);
  const double n = I * J - z;
  return 4.0 * z * (J - 1.0) * (I - z) / (n * n);
}

double two_by_two_rho2(const CorrespondenceMatrix& P) {
  if (P.rows() != 2 || P.cols() != 2)
    throw DimensionMismatch("two_by_two_rho2 needs a 2x2 table, got " +
                            std::to_string(P.rows()) + "x" + std::to_string(P.cols()));
  const Matrix& p = P.p();
  const double det = p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0);
  return det * det / (P.r()(0) * P.r()(1) * P.c()(0) * P.c()(1));
}

std::vector<ConvergenceRow> convergence_sweep(const ContingencyTable& N,
                                              const std::vector<double>& alphas) {
  require_positive(N.values());
  for (double alpha : alphas)
    if (!(alpha > 0.0) || alpha > 1.0) throw InvalidAlpha(alpha);

  const CorrespondenceMatrix P = normalize(N);
  const Matrix lambda = log_interaction(P, uniform_weights(P.rows(), P.cols())).tau();
  const auto I = static_cast<double>(P.rows());
  const auto J = static_cast<double>(P.cols());

  std::vector<ConvergenceRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    const CorrespondenceMatrix Pa = normalize(power_transform(N, alpha));
    const Matrix delta = pearson_contrast(Pa).tau();
    ConvergenceRow row;
    row.alpha = alpha;
    row.max_err_lambda = (delta / alpha - lambda).cwiseAbs().maxCoeff();
    row.max_err_row_marginal = (Pa.r().array() - 1.0 / I).abs().maxCoeff();
    row.max_err_col_marginal = (Pa.c().array() - 1.0 / J).abs().maxCoeff();
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> reported_dispersions(const Decomposition& d, std::size_t count,
                                         const Tolerances& tol) {
  std::vector<double> out(count, 0.0);
  if (d.axes.empty()) return out;
  const double first = d.axes.front().delta;
  for (std::size_t a = 0; a < count && a < d.axes.size(); ++a) {
    const double delta = d.axes[a].delta;
    out[a] = delta > tol.rank_cutoff * first ? delta : 0.0;
  }
  return out;
}

}  // namespace powerca
