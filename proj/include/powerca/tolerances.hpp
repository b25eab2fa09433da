#pragma once

#include <Eigen/Dense>

namespace powerca {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Every numeric threshold used by the library lives here.
struct Tolerances {
  // Double-centering check, relative to max|tau|.
  double centering = 1e-10;
  // Axes with dispersion below rank_cutoff * delta_1 are treated as rank deficiency.
  double rank_cutoff = 1e-9;
  // Marginal residual for matrix balancing.
  double convergence = 1e-12;
  // Cross-product proportionality test for merging lines.
  double proportionality = 1e-9;
  // An interaction whose largest entry is below this is identically zero.
  double zero_interaction = 1e-12;
  // Relative slack when choosing the largest-|f| entry for the sign convention.
  double sign_tie = 1e-9;
  // Probability sums (normalization, weights).
  double probability_sum = 1e-12;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace powerca
