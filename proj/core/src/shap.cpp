#include "aec/shap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "aec/errors.hpp"
#include "aec/parallel.hpp"

namespace aec {

ShapReport shap_linear(const Dataset& d, const ExplainOptions& options) {
  MultivariateFit fit;
  if (d.task() == TaskKind::Regression) {
    fit = ols_multivariate(d.features(), d.target());
  } else {
    fit = logistic_multivariate(d.features(), d.target(), options.logistic);
    if (!fit.converged) {
      throw Error("shap_linear: logistic model did not converge after " +
                  std::to_string(fit.iterations) +
                  " iterations; attributions would not be trustworthy");
    }
  }

  const Eigen::Index n = d.n_features();
  const Eigen::VectorXd means = d.features().colwise().mean();

  ShapReport report;
  report.names = d.feature_names();
  report.phi.resize(d.n_samples(), n);
  report.global_importance.resize(n);
  parallel_for(static_cast<std::size_t>(n), options.threads, [&](std::size_t j) {
    const Eigen::Index col = static_cast<Eigen::Index>(j);
    report.phi.col(col) =
        fit.coefficients(col) * (d.feature(col).array() - means(col)).matrix();
    report.global_importance(col) = report.phi.col(col).cwiseAbs().mean();
  });

  report.rank.resize(static_cast<std::size_t>(n));
  std::iota(report.rank.begin(), report.rank.end(), 0);
  std::sort(report.rank.begin(), report.rank.end(), [&report](int a, int b) {
    const double va = report.global_importance(a);
    const double vb = report.global_importance(b);
    if (va != vb) return va > vb;
    return a < b;
  });
  return report;
}

PairedRanking compare_rankings(const AecReport& a, const ShapReport& b) {
  if (a.names.size() != b.names.size()) {
    throw InvalidArgument("compare_rankings: reports cover " +
                          std::to_string(a.names.size()) + " vs " +
                          std::to_string(b.names.size()) + " features");
  }
  std::unordered_map<std::string, int> shap_position;
  for (std::size_t r = 0; r < b.rank.size(); ++r) {
    shap_position[b.names[static_cast<std::size_t>(b.rank[r])]] = static_cast<int>(r);
  }

  PairedRanking table;
  table.aec_order.reserve(a.names.size());
  table.shap_order.reserve(b.names.size());
  table.displacement.reserve(a.names.size());
  for (std::size_t r = 0; r < a.rank.size(); ++r) {
    const std::string& name = a.names[static_cast<std::size_t>(a.rank[r])];
    const auto it = shap_position.find(name);
    if (it == shap_position.end()) {
      throw InvalidArgument("compare_rankings: feature '" + name +
                            "' missing from the second report");
    }
    table.aec_order.push_back(name);
    table.shap_order.push_back(b.names[static_cast<std::size_t>(b.rank[r])]);
    table.displacement.push_back(std::abs(static_cast<int>(r) - it->second));
  }
  return table;
}

}  // namespace aec
