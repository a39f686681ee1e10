#include "aec/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aec/errors.hpp"
#include "aec/kahan.hpp"
#include "aec/parallel.hpp"

namespace aec {

PairwiseSlopeMatrix pairwise_slopes(const Dataset& d, int threads) {
  const Eigen::Index n = d.n_features();

  // Reject degenerate columns before fanning out so the error names the
  // first offending feature regardless of scheduling.
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto col = d.feature(j);
    if ((col.array() - col.mean()).square().sum() == 0.0) {
      throw InvalidArgument("zero-variance feature '" + d.feature_names()[j] + "'");
    }
  }

  PairwiseSlopeMatrix m;
  m.names = d.feature_names();
  m.slopes = Eigen::MatrixXd::Ones(n, n);

  // Flattened list of the n*(n-1) ordered pairs, row-major over (z, i).
  const std::size_t pair_count = static_cast<std::size_t>(n) * (n - 1);
  parallel_for(pair_count, threads, [&](std::size_t flat) {
    const Eigen::Index z = static_cast<Eigen::Index>(flat / (n - 1));
    Eigen::Index i = static_cast<Eigen::Index>(flat % (n - 1));
    if (i >= z) ++i;  // skip the diagonal
    const UnivariateFit fit =
        ols_univariate(d.feature(i), d.feature(z), d.feature_names()[i]);
    m.slopes(z, i) = fit.slope;
  });
  return m;
}

double collinearity_sum(const PairwiseSlopeMatrix& m, Eigen::Index j) {
  const Eigen::Index n = m.slopes.rows();
  if (j < 0 || j >= n) {
    throw InvalidArgument("collinearity_sum: feature index " + std::to_string(j) +
                          " out of range [0, " + std::to_string(n) + ")");
  }
  KahanSum sum;
  for (Eigen::Index z = 0; z < n; ++z) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == j || z == i) continue;
      sum.add(m.slopes(z, i));
    }
  }
  return sum.value();
}

double target_slope(const Dataset& d, Eigen::Index j, const LogisticOptions& options) {
  if (j < 0 || j >= d.n_features()) {
    throw InvalidArgument("target_slope: feature index " + std::to_string(j) +
                          " out of range");
  }
  if (d.task() == TaskKind::Regression) {
    return ols_univariate(d.feature(j), d.target(), d.feature_names()[j]).slope;
  }
  return logistic_univariate(d.feature(j), d.target(), options, d.feature_names()[j])
      .slope;
}

namespace {

std::vector<int> rank_by_abs_descending(const Eigen::VectorXd& values) {
  std::vector<int> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&values](int a, int b) {
    const double va = std::abs(values(a));
    const double vb = std::abs(values(b));
    if (va != vb) return va > vb;
    return a < b;
  });
  return order;
}

}  // namespace

AecReport aec_scores(const Dataset& d, const ExplainOptions& options) {
  const Eigen::Index n = d.n_features();
  const PairwiseSlopeMatrix slopes = pairwise_slopes(d, options.threads);

  AecReport report;
  report.names = d.feature_names();
  report.target_slope.resize(n);
  report.collinearity_sum.resize(n);
  report.score.resize(n);
  report.target_fit_converged.assign(static_cast<std::size_t>(n), true);

  if (d.task() == TaskKind::Regression) {
    parallel_for(static_cast<std::size_t>(n), options.threads, [&](std::size_t j) {
      const Eigen::Index col = static_cast<Eigen::Index>(j);
      report.target_slope(col) =
          ols_univariate(d.feature(col), d.target(), d.feature_names()[j]).slope;
    });
  } else {
    std::vector<char> converged(static_cast<std::size_t>(n), 1);
    parallel_for(static_cast<std::size_t>(n), options.threads, [&](std::size_t j) {
      const Eigen::Index col = static_cast<Eigen::Index>(j);
      const UnivariateFit fit = logistic_univariate(
          d.feature(col), d.target(), options.logistic, d.feature_names()[j]);
      report.target_slope(col) = fit.slope;
      converged[j] = fit.converged ? 1 : 0;
    });
    for (Eigen::Index j = 0; j < n; ++j) {
      report.target_fit_converged[static_cast<std::size_t>(j)] = converged[j] != 0;
    }
  }

  for (Eigen::Index j = 0; j < n; ++j) {
    report.collinearity_sum(j) = collinearity_sum(slopes, j);
    report.score(j) = report.target_slope(j) * report.collinearity_sum(j);
  }
  report.rank = rank_by_abs_descending(report.score);
  return report;
}

SlopeSums total_slope_sums(const PairwiseSlopeMatrix& m) {
  const Eigen::Index n = m.slopes.rows();
  SlopeSums sums;
  sums.column_sums.resize(n);

  KahanSum total;
  for (Eigen::Index z = 0; z < n; ++z) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (z == i) continue;
      total.add(m.slopes(z, i));
    }
  }
  sums.total = total.value();

  for (Eigen::Index c = 0; c < n; ++c) {
    KahanSum column;
    for (Eigen::Index z = 0; z < n; ++z) {
      if (z == c) continue;
      column.add(m.slopes(z, c));
    }
    sums.column_sums(c) = column.value();
  }
  return sums;
}

}  // namespace aec
