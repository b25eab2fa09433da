#include "powerca/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "powerca/errors.hpp"

namespace powerca {

ContingencyTable power_transform(const ContingencyTable& N, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) throw InvalidAlpha(alpha);
  Matrix out = N.values().unaryExpr([alpha](double x) { return x > 0.0 ? std::pow(x, alpha) : 0.0; });
  return ContingencyTable(std::move(out), N.row_labels(), N.col_labels());
}

ContingencyTable indicator(const ContingencyTable& N) {
  Matrix out = N.values().unaryExpr([](double x) { return x > 0.0 ? 1.0 : 0.0; });
  return ContingencyTable(std::move(out), N.row_labels(), N.col_labels());
}

Matrix log_transform(const ContingencyTable& N) {
  const Matrix& V = N.values();
  for (Eigen::Index j = 0; j < V.cols(); ++j)
    for (Eigen::Index i = 0; i < V.rows(); ++i)
      if (!(V(i, j) > 0.0))
        throw NonPositiveEntry(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return V.array().log().matrix();
}

bool proportional(const Vector& x, const Vector& y, double tol) {
  const double mx = x.cwiseAbs().maxCoeff();
  const double my = y.cwiseAbs().maxCoeff();
  if (mx == 0.0 || my == 0.0) return mx == 0.0 && my == 0.0;
  const double bound = tol * mx * my;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = i + 1; j < x.size(); ++j)
      if (std::abs(x(i) * y(j) - x(j) * y(i)) > bound) return false;
  return true;
}

namespace {

using Groups = std::vector<std::vector<std::size_t>>;

// One greedy pass over the rows of M. Returns true when at least one pair merged.
bool merge_rows(Matrix& M, Groups& groups, std::vector<std::string>& labels, double tol) {
  const Eigen::Index n = M.rows();
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  std::vector<Vector> sums;
  Groups new_groups;
  std::vector<std::string> new_labels;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (taken[static_cast<std::size_t>(i)]) continue;
    const Vector rep = M.row(i).transpose();
    Vector sum = rep;
    auto group = groups[static_cast<std::size_t>(i)];
    std::string label = labels[static_cast<std::size_t>(i)];
    for (Eigen::Index k = i + 1; k < n; ++k) {
      if (taken[static_cast<std::size_t>(k)]) continue;
      const Vector other = M.row(k).transpose();
      if (!proportional(rep, other, tol)) continue;
      taken[static_cast<std::size_t>(k)] = true;
      sum += other;
      const auto& g = groups[static_cast<std::size_t>(k)];
      group.insert(group.end(), g.begin(), g.end());
      label += "+" + labels[static_cast<std::size_t>(k)];
    }
    std::sort(group.begin(), group.end());
    sums.push_back(std::move(sum));
    new_groups.push_back(std::move(group));
    new_labels.push_back(std::move(label));
  }
  if (static_cast<Eigen::Index>(sums.size()) == n) return false;
  Matrix merged(static_cast<Eigen::Index>(sums.size()), M.cols());
  for (std::size_t k = 0; k < sums.size(); ++k)
    merged.row(static_cast<Eigen::Index>(k)) = sums[k].transpose();
  M = std::move(merged);
  groups = std::move(new_groups);
  labels = std::move(new_labels);
  return true;
}

Groups singleton_groups(Eigen::Index n) {
  Groups g(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < g.size(); ++k) g[k] = {k};
  return g;
}

}  // namespace

MergeReport merge_proportional(const ContingencyTable& N, bool rows, bool cols,
                               const Tolerances& tol) {
  Matrix M = N.values();
  Groups row_groups = singleton_groups(M.rows());
  Groups col_groups = singleton_groups(M.cols());
  std::vector<std::string> row_labels = N.row_labels();
  std::vector<std::string> col_labels = N.col_labels();

  bool changed = true;
  while (changed) {
    changed = false;
    if (rows) changed = merge_rows(M, row_groups, row_labels, tol.proportionality) || changed;
    if (cols) {
      Matrix T = M.transpose();
      if (merge_rows(T, col_groups, col_labels, tol.proportionality)) {
        M = T.transpose();
        changed = true;
      }
    }
  }
  if (M.rows() < 2 || M.cols() < 2)
    throw InvalidTable("proportional merging collapses the table to " + std::to_string(M.rows()) +
                       "x" + std::to_string(M.cols()) + " (rank-one table)");
  return {ContingencyTable(std::move(M), std::move(row_labels), std::move(col_labels)),
          std::move(row_groups), std::move(col_groups)};
}

ZeroStats zero_stats(const ContingencyTable& N) {
  ZeroStats s;
  const Matrix& V = N.values();
  s.total_cells = static_cast<std::size_t>(V.size());
  s.per_column_zeros.assign(static_cast<std::size_t>(V.cols()), 0);
  for (Eigen::Index j = 0; j < V.cols(); ++j)
    for (Eigen::Index i = 0; i < V.rows(); ++i)
      if (V(i, j) == 0.0) ++s.per_column_zeros[static_cast<std::size_t>(j)];
  s.zero_cells = std::accumulate(s.per_column_zeros.begin(), s.per_column_zeros.end(),
                                 std::size_t{0});
  s.zero_percent = 100.0 * static_cast<double>(s.zero_cells) / static_cast<double>(s.total_cells);
  return s;
}

namespace {

void check_zero_count(long rows, long cols, long zeros) {
  if (rows < 2 || cols < 2)
    throw InvalidArgument("need I >= 2 and J >= 2, got I=" + std::to_string(rows) +
                          ", J=" + std::to_string(cols));
  if (zeros < 1 || zeros > rows - 1) throw BadZeroCount(zeros, rows);
}

}  // namespace

ContingencyTable one_zero_column_reduction(long rows, long cols, long zeros) {
  check_zero_count(rows, cols, zeros);
  const auto I = static_cast<double>(rows);
  const auto J = static_cast<double>(cols);
  const auto m = static_cast<double>(zeros);
  Matrix R(2, 2);
  R << 0.0, m * (J - 1.0), I - m, (I - m) * (J - 1.0);
  return ContingencyTable(std::move(R));
}

ContingencyTable one_zero_column_indicator(long rows, long cols, long zeros) {
  check_zero_count(rows, cols, zeros);
  Matrix Z = Matrix::Ones(rows, cols);
  Z.col(0).head(zeros).setZero();
  return ContingencyTable(std::move(Z));
}

ContingencyTable drop_empty(const ContingencyTable& N) {
  const Matrix& V = N.values();
  std::vector<Eigen::Index> keep_rows, keep_cols;
  for (Eigen::Index i = 0; i < V.rows(); ++i)
    if (V.row(i).sum() > 0.0) keep_rows.push_back(i);
  for (Eigen::Index j = 0; j < V.cols(); ++j)
    if (V.col(j).sum() > 0.0) keep_cols.push_back(j);
  Matrix out = V(keep_rows, keep_cols);
  std::vector<std::string> rl, cl;
  for (auto i : keep_rows) rl.push_back(N.row_labels()[static_cast<std::size_t>(i)]);
  for (auto j : keep_cols) cl.push_back(N.col_labels()[static_cast<std::size_t>(j)]);
  return ContingencyTable(std::move(out), std::move(rl), std::move(cl));
}

}  // namespace powerca
