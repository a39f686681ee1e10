#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "aec/dataset.hpp"
#include "aec/fit.hpp"

namespace aec {

/// All feature-on-feature univariate slopes: slopes(z, i) is the OLS slope of
/// regressing feature z (dependent) on feature i (independent). The diagonal
/// is fixed to 1. For z != i, slopes(z, i) * slopes(i, z) equals the squared
/// Pearson correlation of the pair.
struct PairwiseSlopeMatrix {
  std::vector<std::string> names;
  Eigen::MatrixXd slopes;
};

/// Shared knobs for the explain entry points.
struct ExplainOptions {
  int threads = 0;             // 0 = all hardware threads
  LogisticOptions logistic{};  // solver settings for classification targets
};

/// Per-feature attribution scores with ranking. score[j] is the univariate
/// outcome slope of feature j times the summed pairwise slopes among the
/// other features; rank orders feature indices by |score| descending with
/// ties broken by ascending index.
struct AecReport {
  std::vector<std::string> names;
  Eigen::VectorXd target_slope;
  Eigen::VectorXd collinearity_sum;
  Eigen::VectorXd score;
  std::vector<int> rank;
  /// False entries flag logistic target fits that did not converge; their
  /// slopes are used as-is.
  std::vector<bool> target_fit_converged;
};

/// Fits all n*(n-1) feature-on-feature univariate regressions. Fits are
/// independent and fan out across threads into preassigned slots, so the
/// result does not depend on the worker count.
PairwiseSlopeMatrix pairwise_slopes(const Dataset& d, int threads = 0);

/// Sum of slopes(z, i) over all ordered pairs with i != j and z != i,
/// accumulated in fixed (z outer, i inner) ascending order with compensated
/// summation.
double collinearity_sum(const PairwiseSlopeMatrix& m, Eigen::Index j);

/// Univariate outcome slope of feature j: OLS for regression targets,
/// logistic (log-odds per unit) for classification targets.
double target_slope(const Dataset& d, Eigen::Index j,
                    const LogisticOptions& options = {});

/// Full scoring pass: one pairwise slope matrix, one target fit per feature,
/// scores and ranking. Deterministic for identical input.
AecReport aec_scores(const Dataset& d, const ExplainOptions& options = {});

/// Whole-matrix slope sums: total over all ordered pairs z != i, and per-
/// column sums excluding the diagonal. collinearity_sum(m, j) equals
/// total - column_sums[j] up to compensated-summation tolerance.
struct SlopeSums {
  double total = 0.0;
  Eigen::VectorXd column_sums;
};
SlopeSums total_slope_sums(const PairwiseSlopeMatrix& m);

}  // namespace aec
