#pragma once

#include <vector>

#include "powerca/table.hpp"

namespace powerca {

// Entrywise n_ij^alpha for alpha in (0, 1]; zeros stay zero. alpha = 0 is rejected:
// use indicator() for the limit.
ContingencyTable power_transform(const ContingencyTable& N, double alpha);

// z_ij = 1 if n_ij > 0 else 0.
ContingencyTable indicator(const ContingencyTable& N);

// Entrywise natural log; every entry must be strictly positive.
Matrix log_transform(const ContingencyTable& N);

struct MergeReport {
  ContingencyTable merged;
  // Partitions of the original indices, one group per merged line, ordered by lowest member.
  std::vector<std::vector<std::size_t>> row_groups;
  std::vector<std::vector<std::size_t>> col_groups;
};

// Two lines are proportional iff max |x_i y_j - x_j y_i| <= tol * max|x| * max|y|.
// All-zero lines only match other all-zero lines.
bool proportional(const Vector& x, const Vector& y, double tol);

// Greedily merges proportional rows, then columns, until nothing changes.
MergeReport merge_proportional(const ContingencyTable& N, bool rows = true, bool cols = true,
                               const Tolerances& tol = kDefaultTolerances);

struct ZeroStats {
  std::size_t total_cells = 0;
  std::size_t zero_cells = 0;
  double zero_percent = 0.0;
  std::vector<std::size_t> per_column_zeros;
};

ZeroStats zero_stats(const ContingencyTable& N);

// The 2x2 table [[0, m(J-1)], [I-m, (I-m)(J-1)]] that an I x J indicator with m zeros
// in a single column collapses to under distributional equivalence.
ContingencyTable one_zero_column_reduction(long rows, long cols, long zeros);

// The I x J 0/1 table with zeros in the first m cells of its first column.
ContingencyTable one_zero_column_indicator(long rows, long cols, long zeros);

// Drops all-zero rows and columns (CLI --drop-empty).
ContingencyTable drop_empty(const ContingencyTable& N);

}  // namespace powerca
