#include "aec/stability.hpp"

#include <algorithm>
#include <unordered_set>

#include "aec/errors.hpp"
#include "aec/shap.hpp"

namespace aec {

std::vector<std::string> AecExplainer::rank(const Dataset& d) const {
  const AecReport report = aec_scores(d, options_);
  std::vector<std::string> ordered;
  ordered.reserve(report.rank.size());
  for (const int idx : report.rank) {
    ordered.push_back(report.names[static_cast<std::size_t>(idx)]);
  }
  return ordered;
}

std::vector<std::string> LinearShapExplainer::rank(const Dataset& d) const {
  const ShapReport report = shap_linear(d, options_);
  std::vector<std::string> ordered;
  ordered.reserve(report.rank.size());
  for (const int idx : report.rank) {
    ordered.push_back(report.names[static_cast<std::size_t>(idx)]);
  }
  return ordered;
}

namespace {

std::vector<std::string> checked_ranking(const Explainer& explainer, const Dataset& d,
                                         std::size_t step) {
  std::vector<std::string> ranking;
  try {
    ranking = explainer.rank(d);
  } catch (const Error& e) {
    throw Error("nmr: explainer '" + explainer.name() + "' failed at step " +
                std::to_string(step) + " (" + std::to_string(d.n_features()) +
                " features left): " + e.what());
  }
  if (ranking.size() != static_cast<std::size_t>(d.n_features())) {
    throw Error("nmr: explainer '" + explainer.name() + "' returned " +
                std::to_string(ranking.size()) + " names for " +
                std::to_string(d.n_features()) + " features");
  }
  std::unordered_set<std::string> expected(d.feature_names().begin(),
                                           d.feature_names().end());
  for (const auto& name : ranking) {
    if (expected.erase(name) == 0) {
      throw Error("nmr: explainer '" + explainer.name() +
                  "' ranking is not a permutation of the dataset features ('" + name +
                  "' unexpected or repeated)");
    }
  }
  return ranking;
}

}  // namespace

NmrResult nmr(const Dataset& d, const Explainer& explainer) {
  if (d.n_features() < 3) {
    throw InvalidArgument("nmr: needs at least 3 features, got " +
                          std::to_string(d.n_features()));
  }

  NmrResult result;
  Dataset current = d;
  std::vector<std::string> ranking = checked_ranking(explainer, current, 0);

  long total_movements = 0;
  long total_remaining = 0;
  for (std::size_t step = 1; current.n_features() > 2; ++step) {
    const std::string& top = ranking.front();
    // Expected order after removal: the previous ranking minus its head.
    const std::vector<std::string> expected(ranking.begin() + 1, ranking.end());

    current = current.without_feature(current.feature_index(top));
    const std::vector<std::string> next = checked_ranking(explainer, current, step);

    int movements = 0;
    for (std::size_t pos = 0; pos < expected.size(); ++pos) {
      if (next[pos] != expected[pos]) ++movements;
    }

    NmrStep record;
    record.removed_feature = top;
    record.movement_count = movements;
    record.remaining_count = static_cast<int>(expected.size());
    result.steps.push_back(record);
    result.removal_sequence.push_back(top);
    total_movements += movements;
    total_remaining += record.remaining_count;

    ranking = next;
  }

  result.nmr = static_cast<double>(total_movements) / static_cast<double>(total_remaining);
  return result;
}

std::vector<NmrComparisonRow> nmr_comparison(const Dataset& d,
                                             const ExplainOptions& options) {
  std::vector<NmrComparisonRow> rows;
  const AecExplainer aec_explainer(options);
  const LinearShapExplainer shap_explainer(options);
  rows.push_back({aec_explainer.name(), nmr(d, aec_explainer).nmr});
  rows.push_back({shap_explainer.name(), nmr(d, shap_explainer).nmr});
  return rows;
}

}  // namespace aec
