#pragma once

#include "powerca/table.hpp"
#include "powerca/triplet.hpp"

namespace powerca {

// sigma_ij = p_ij - p_i+ p_+j.
Matrix cross_covariance(const CorrespondenceMatrix& P);

// Triplet(IJ * sigma, uniform metrics) used by covariance (interbattery) analysis.
Triplet covariance_residuals(const CorrespondenceMatrix& P,
                             const Tolerances& tol = kDefaultTolerances);

// Delta_ij = p_ij / (p_i+ p_+j) - 1 with marginal metrics: the CA interaction.
Triplet pearson_contrast(const CorrespondenceMatrix& P,
                         const Tolerances& tol = kDefaultTolerances);

// Weighted log interaction G_ij - G_i+ - G_+j + G_++ with G = log P, metrics = weights.
// Throws NonPositiveCell when any p_ij = 0.
Triplet log_interaction(const CorrespondenceMatrix& P, const WeightScheme& w,
                        const Tolerances& tol = kDefaultTolerances);

// Y_ij - Y_i+ - Y_+j + Y_++ with weighted means.
Matrix additive_center(const Matrix& Y, const Vector& row_weights, const Vector& col_weights);

// Y_ij - Y_i+ Y_+j / Y_++ with weighted means. Throws ZeroGrandMean when |Y_++| is negligible.
Matrix multiplicative_center(const Matrix& Y, const Vector& row_weights,
                             const Vector& col_weights,
                             const Tolerances& tol = kDefaultTolerances);

// p_ij / (w^C_j w^R_i) - p_i+ / w^R_i - p_+j / w^C_j + 1, the linearization of the
// weighted log interaction around the independence table.
Matrix first_order_approx(const CorrespondenceMatrix& P, const WeightScheme& w);

// Density p_ij / (m^r_i m^c_j) of P against a product measure.
Matrix density(const CorrespondenceMatrix& P, const Vector& row_weights,
               const Vector& col_weights);

}  // namespace powerca
