#pragma once

#include <cstddef>
#include <limits>

#include "powerca/table.hpp"
#include "powerca/triplet.hpp"

namespace powerca {

// Request every axis the triplet supports (min(I, J) - 1).
inline constexpr std::size_t kAllAxes = std::numeric_limits<std::size_t>::max();

// Exhaustive: enumerate 2^(d-1) sign vectors over the shorter side d = min(I, J).
// Ascent: alternating sign updates from deterministic restarts.
// Auto: exhaustive when d <= kExhaustiveLimit, ascent otherwise.
enum class TaxicabAlgorithm { Exhaustive, Ascent, Auto };

inline constexpr Eigen::Index kExhaustiveLimit = 20;

const char* to_string(TaxicabAlgorithm algorithm);

// Weighted SVD of the triplet. Axes satisfy
//   delta^2 = sum_i f(i)^2 m^r_i = sum_j g(j)^2 m^c_j,
//   weighted means of f and g are zero, and distinct axes are weighted-orthogonal,
// and are returned in decreasing delta. Dispersions below the rank cutoff are dropped.
Decomposition weighted_svd(const Triplet& t, std::size_t k = kAllAxes,
                           const Tolerances& tol = kDefaultTolerances);

struct TaxicabAxis {
  SignVector u;  // length J, maximizes ||S u||_1
  SignVector v;  // length I, sign(S u)
  Vector a;      // S u
  Vector b;      // S' v
  double delta;  // ||S u||_1 = sum_j u_j b_j
};

// First taxicab axis of the cross-covariance S. Throws ZeroMatrix when S is negligible.
TaxicabAxis taxicab_axis(const Matrix& S, TaxicabAlgorithm algorithm = TaxicabAlgorithm::Auto,
                         const Tolerances& tol = kDefaultTolerances);

// ||S u||_1 maximized over all u in {-1, +1}^J by brute force. The first sign is fixed to +1.
double taxicab_norm_exhaustive(const Matrix& S);

// Successive taxicab axes with deflation S <- S - a b' / delta.
Decomposition taxicab_svd(const Triplet& t, std::size_t k = kAllAxes,
                          TaxicabAlgorithm algorithm = TaxicabAlgorithm::Auto,
                          const Tolerances& tol = kDefaultTolerances);

// Rank-k partial sum of f_a(i) g_a(j) / delta_a.
Matrix reconstruct(const Decomposition& d, std::size_t k);

// p_ij = p_i+ p_+j (1 + reconstruct_k); d must come from pearson_contrast(P).
Matrix ca_reconstruct(const CorrespondenceMatrix& P, const Decomposition& d, std::size_t k);

// p_ij = p_+j / I + p_i+ / J - 1/(IJ) + reconstruct_k; d must come from the uniform
// additive centering of P.
Matrix lra_reconstruct(const CorrespondenceMatrix& P, const Decomposition& d, std::size_t k);

// Largest violation of each factorization condition, scaled as noted.
struct ConditionReport {
  double dispersion = 0.0;     // |delta - weighted norm| / delta_1 (squared for svd)
  double centering = 0.0;      // |weighted mean| / delta_1
  double orthogonality = 0.0;  // cross moments (svd) or sign-orthogonality (taxicab) / delta_1^k
  double reconstruction = 0.0; // max|tau - reconstruct(all)| / max|tau|
  double worst() const;
};

ConditionReport check_conditions(const Decomposition& d);

}  // namespace powerca
