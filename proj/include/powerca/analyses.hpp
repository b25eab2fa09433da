#pragma once

#include <vector>

#include "powerca/decomp.hpp"
#include "powerca/table.hpp"

namespace powerca {

// Correspondence analysis: weighted SVD of the Pearson contrast; inertias are delta^2.
Decomposition ca(const ContingencyTable& N, std::size_t k = kAllAxes,
                 const Tolerances& tol = kDefaultTolerances);

// Taxicab correspondence analysis of the same triplet.
Decomposition tca(const ContingencyTable& N, std::size_t k = kAllAxes,
                  TaxicabAlgorithm algorithm = TaxicabAlgorithm::Auto,
                  const Tolerances& tol = kDefaultTolerances);

struct FactorOptions {
  Method method = Method::Svd;
  std::size_t k = kAllAxes;
  TaxicabAlgorithm algorithm = TaxicabAlgorithm::Auto;
};

// Factorizes a triplet with the requested method.
Decomposition factorize(const Triplet& t, const FactorOptions& opts,
                        const Tolerances& tol = kDefaultTolerances);

// Weighted log-ratio analysis; uniform weights give uwLRA / uwTLRA.
Decomposition lra(const ContingencyTable& N, WeightKind weights, const FactorOptions& opts = {},
                  const Tolerances& tol = kDefaultTolerances);
Decomposition lra(const ContingencyTable& N, const WeightScheme& weights,
                  const FactorOptions& opts = {}, const Tolerances& tol = kDefaultTolerances);

// Uniformly weighted LRA of a 0/1 incidence table through log2(z + 1) = z: the
// additive centering of Z / n, whose reconstruction is lra_reconstruct.
Decomposition lra_incidence(const ContingencyTable& Z, const FactorOptions& opts = {},
                            const Tolerances& tol = kDefaultTolerances);

// Covariance (interbattery) analysis: SVD of IJ * sigma with uniform metrics.
Decomposition covariance_analysis(const ContingencyTable& N, std::size_t k = kAllAxes,
                                  const Tolerances& tol = kDefaultTolerances);

struct BalancedTable {
  Matrix q;
  Vector a;
  Vector b;
  std::size_t iterations = 0;
  double residual = 0.0;
};

// Alternating row/column scaling of a strictly positive P to uniform marginals
// q_i+ = 1/I, q_+j = 1/J. Throws NoConvergence after max_iter sweeps.
BalancedTable balance_to_uniform(const CorrespondenceMatrix& P, double tol = 1e-12,
                                 std::size_t max_iter = 100000);

// Marginal-free CA: balance, then factorize IJ q_ij - 1 with uniform metrics.
Decomposition mfca(const ContingencyTable& N, const FactorOptions& opts = {},
                   const Tolerances& tol = kDefaultTolerances);

// Closed forms for an I x J indicator with m zeros in one column.
double lemma2_ca_inertia(long m, long rows, long cols);
double lemma2_tca_dispersion(long m, long rows, long cols);

// (p11 p22 - p12 p21)^2 / (p1+ p2+ p+1 p+2) for a 2x2 probability table.
double two_by_two_rho2(const CorrespondenceMatrix& P);

struct ConvergenceRow {
  double alpha = 0.0;
  double max_err_lambda = 0.0;        // max |Delta^(alpha) / alpha - lambda_uniform|
  double max_err_row_marginal = 0.0;  // max_i |p_i+^(alpha) - 1/I|
  double max_err_col_marginal = 0.0;  // max_j |p_+j^(alpha) - 1/J|
};

inline const std::vector<double> kDefaultAlphaGrid{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};

// Distance of the CA interaction of N^alpha from alpha times the uniform log interaction.
std::vector<ConvergenceRow> convergence_sweep(const ContingencyTable& N,
                                              const std::vector<double>& alphas =
                                                  kDefaultAlphaGrid);

// The first `count` dispersions, zero-padded; values below rank_cutoff * delta_1 read as 0.
std::vector<double> reported_dispersions(const Decomposition& d, std::size_t count,
                                         const Tolerances& tol = kDefaultTolerances);

}  // namespace powerca
