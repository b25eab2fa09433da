#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "powerca/decomp.hpp"
#include "powerca/errors.hpp"

namespace powerca {

namespace detail {
std::size_t axis_limit(const Triplet& t, std::size_t k);
double residual_norm(const Decomposition& d);
}  // namespace detail

const char* to_string(TaxicabAlgorithm algorithm) {
  switch (algorithm) {
    case TaxicabAlgorithm::Exhaustive: return "exhaustive";
    case TaxicabAlgorithm::Ascent: return "ascent";
    case TaxicabAlgorithm::Auto: return "auto";
  }
  return "?";
}

namespace {

// sign(0) = +1.
SignVector sign_of(const Vector& x) {
  return x.unaryExpr([](double t) { return t < 0.0 ? -1.0 : 1.0; });
}

// Best sign vector w (length S.cols()) for ||S w||_1, enumerated in reflected Gray-code
// order from the all-plus vector with w_0 pinned to +1. Ties keep the first maximizer.
SignVector enumerate_signs(const Matrix& S) {
  const Eigen::Index n = S.cols();
  SignVector w = SignVector::Ones(n);
  SignVector best = w;
  Vector a = S * w;
  double best_value = a.cwiseAbs().sum();
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t step = 1; step < count; ++step) {
    // Gray code: flip the bit at the position of the lowest set bit of step.
    const auto bit = static_cast<Eigen::Index>(std::countr_zero(step)) + 1;
    a -= 2.0 * w(bit) * S.col(bit);
    w(bit) = -w(bit);
    // Refresh periodically so incremental drift never decides a comparison.
    if ((step & 0x3ff) == 0) a = S * w;
    const double value = a.cwiseAbs().sum();
    if (value > best_value) {
      best_value = value;
      best = w;
    }
  }
  return best;
}

// Alternate v = sign(S u), u = sign(S' v) until u repeats.
SignVector climb(const Matrix& S, SignVector u) {
  for (int iter = 0; iter < 1000; ++iter) {
    const SignVector v = sign_of(S * u);
    SignVector next = sign_of(S.transpose() * v);
    if (next == u) break;
    u = std::move(next);
  }
  return u;
}

// Single sign flips that still raise the objective, each followed by another climb.
SignVector polish(const Matrix& S, SignVector u) {
  for (;;) {
    u = climb(S, std::move(u));
    const Vector a = S * u;
    const double value = a.cwiseAbs().sum();
    Eigen::Index flip = -1;
    for (Eigen::Index j = 0; j < S.cols() && flip < 0; ++j)
      if ((a - 2.0 * u(j) * S.col(j)).cwiseAbs().sum() > value * (1.0 + 1e-14)) flip = j;
    if (flip < 0) return u;
    u(flip) = -u(flip);
  }
}

// Restarts, in order: every row of S, sums and differences of row pairs among the
// kPairRows heaviest rows, then every column pushed through S'. Each start climbs and is
// polished; the first best value wins.
constexpr Eigen::Index kPairRows = 24;

SignVector ascent(const Matrix& S) {
  std::vector<SignVector> starts;
  for (Eigen::Index i = 0; i < S.rows(); ++i) starts.push_back(sign_of(S.row(i).transpose()));

  std::vector<Eigen::Index> heavy(static_cast<std::size_t>(S.rows()));
  std::iota(heavy.begin(), heavy.end(), Eigen::Index{0});
  const Vector weight = S.cwiseAbs().rowwise().sum();
  std::stable_sort(heavy.begin(), heavy.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return weight(x) > weight(y); });
  heavy.resize(static_cast<std::size_t>(std::min(S.rows(), kPairRows)));
  std::sort(heavy.begin(), heavy.end());
  for (std::size_t x = 0; x < heavy.size(); ++x)
    for (std::size_t y = x + 1; y < heavy.size(); ++y) {
      starts.push_back(sign_of((S.row(heavy[x]) + S.row(heavy[y])).transpose()));
      starts.push_back(sign_of((S.row(heavy[x]) - S.row(heavy[y])).transpose()));
    }
  for (Eigen::Index j = 0; j < S.cols(); ++j)
    starts.push_back(sign_of(S.transpose() * sign_of(S.col(j))));

  SignVector best;
  double best_value = -1.0;
  for (auto& start : starts) {
    SignVector u = polish(S, std::move(start));
    const double value = (S * u).cwiseAbs().sum();
    if (value > best_value) {
      best_value = value;
      best = std::move(u);
    }
  }
  return best;
}

// Completes a candidate u to a fixed point (u = sign(b), v = sign(a)). The objective
// never decreases along the way.
TaxicabAxis settle(const Matrix& S, SignVector u) {
  TaxicabAxis ax;
  for (int iter = 0; iter < 1000; ++iter) {
    ax.a = S * u;
    ax.v = sign_of(ax.a);
    ax.b = S.transpose() * ax.v;
    SignVector next = sign_of(ax.b);
    if (next == u) break;
    u = std::move(next);
  }
  ax.u = std::move(u);
  ax.delta = ax.a.cwiseAbs().sum();
  return ax;
}

}  // namespace

double taxicab_norm_exhaustive(const Matrix& S) {
  return (S * enumerate_signs(S)).cwiseAbs().sum();
}

TaxicabAxis taxicab_axis(const Matrix& S, TaxicabAlgorithm algorithm, const Tolerances&) {
  const double scale = S.cwiseAbs().maxCoeff();
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw ZeroMatrix("cross-covariance matrix is zero; no taxicab axis");

  const Eigen::Index shorter = std::min(S.rows(), S.cols());
  if (algorithm == TaxicabAlgorithm::Auto)
    algorithm = shorter <= kExhaustiveLimit ? TaxicabAlgorithm::Exhaustive
                                            : TaxicabAlgorithm::Ascent;
  if (algorithm == TaxicabAlgorithm::Exhaustive && shorter > 62)
    throw InvalidArgument("exhaustive taxicab search over " + std::to_string(shorter) +
                          " signs is not feasible");

  SignVector u;
  if (algorithm == TaxicabAlgorithm::Ascent) {
    u = ascent(S);
  } else if (S.cols() <= S.rows()) {
    u = enumerate_signs(S);
  } else {
    // max_u ||S u||_1 = max_v ||S' v||_1; enumerate the shorter side.
    const SignVector v = enumerate_signs(S.transpose());
    u = sign_of(S.transpose() * v);
  }
  return settle(S, std::move(u));
}

Decomposition taxicab_svd(const Triplet& t, std::size_t k, TaxicabAlgorithm algorithm,
                          const Tolerances& tol) {
  const std::size_t limit = detail::axis_limit(t, k);
  Decomposition d(Method::Taxicab, t);

  if (t.tau().cwiseAbs().maxCoeff() > tol.zero_interaction) {
    const Vector& mr = t.row_metric();
    const Vector& mc = t.col_metric();
    Matrix S = t.cross_covariance();
    const auto drift_of = [](const Matrix& M) {
      return std::max(M.rowwise().sum().cwiseAbs().maxCoeff(),
                      M.colwise().sum().cwiseAbs().maxCoeff());
    };
    const double allowed_drift =
        std::max(tol.centering * S.cwiseAbs().maxCoeff(), 10.0 * drift_of(S));
    while (d.axes.size() < limit) {
      if (!(S.cwiseAbs().maxCoeff() > 0.0)) break;
      TaxicabAxis ax = taxicab_axis(S, algorithm, tol);
      if (!d.axes.empty() && !(ax.delta > tol.rank_cutoff * d.axes.front().delta)) break;
      if (!(ax.delta > 0.0)) break;

      S.noalias() -= ax.a * ax.b.transpose() / ax.delta;
      // Deflation keeps S centered; drift here means the extraction went wrong.
      if (const double drift = drift_of(S); drift > allowed_drift)
        throw NumericError("taxicab deflation lost double centering (drift " +
                           std::to_string(drift) + ")");

      Axis axis;
      axis.f = ax.a.cwiseQuotient(mr);
      axis.g = ax.b.cwiseQuotient(mc);
      axis.delta = ax.delta;
      axis.u = std::move(ax.u);
      axis.v = std::move(ax.v);
      canonicalize_sign(axis, tol);
      d.axes.push_back(std::move(axis));
    }
  }
  for (const Axis& axis : d.axes) d.total_dispersion += axis.delta;
  d.residual_norm = detail::residual_norm(d);
  return d;
}

}  // namespace powerca
