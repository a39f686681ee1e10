#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "aec/dataset.hpp"
#include "aec/engine.hpp"

namespace aec {

/// Exact interventional Shapley attributions for a linear model: phi(s, j) =
/// coefficient_j * (x_sj - column mean). For classification the model is
/// logistic and attributions live on the log-odds scale, where the model is
/// linear and the closed form is exact.
struct ShapReport {
  std::vector<std::string> names;
  Eigen::MatrixXd phi;                // n_samples x n_features
  Eigen::VectorXd global_importance;  // mean |phi| per feature
  std::vector<int> rank;              // by importance descending, ties by index
};

/// Fits the multivariate model (OLS or logistic by task) and computes exact
/// per-sample attributions. Throws SingularMatrixError for rank-deficient
/// designs and SolverDivergenceError-adjacent Error when the logistic fit
/// does not converge (the comparator requires a trustworthy model).
ShapReport shap_linear(const Dataset& d, const ExplainOptions& options = {});

/// Side-by-side ordering of two explainers over the same features, plus the
/// absolute rank displacement of each feature in the first ordering.
struct PairedRanking {
  std::vector<std::string> aec_order;
  std::vector<std::string> shap_order;
  std::vector<int> displacement;
};

PairedRanking compare_rankings(const AecReport& a, const ShapReport& b);

}  // namespace aec
