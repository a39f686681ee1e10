#pragma once

#include <string>
#include <vector>

#include "aec/dataset.hpp"
#include "aec/engine.hpp"

namespace aec {

/// A method that orders a dataset's features from most to least important.
/// rank() must return a permutation of the dataset's feature names.
class Explainer {
 public:
  virtual ~Explainer() = default;
  virtual std::string name() const = 0;
  virtual std::vector<std::string> rank(const Dataset& d) const = 0;
};

class AecExplainer final : public Explainer {
 public:
  explicit AecExplainer(ExplainOptions options = {}) : options_(options) {}
  std::string name() const override { return "aec"; }
  std::vector<std::string> rank(const Dataset& d) const override;

 private:
  ExplainOptions options_;
};

class LinearShapExplainer final : public Explainer {
 public:
  explicit LinearShapExplainer(ExplainOptions options = {}) : options_(options) {}
  std::string name() const override { return "linear-shap"; }
  std::vector<std::string> rank(const Dataset& d) const override;

 private:
  ExplainOptions options_;
};

struct NmrStep {
  std::string removed_feature;
  int movement_count = 0;
  int remaining_count = 0;
};

/// Normalized movement rate: how much a ranking reshuffles as top features
/// are removed one at a time, as a fraction in [0, 1]. 0 means the surviving
/// order never changed; 1 means every position changed at every step.
struct NmrResult {
  double nmr = 0.0;
  std::vector<NmrStep> steps;
  std::vector<std::string> removal_sequence;
};

/// Removal loop: rank, drop the top feature, re-rank, and count how many of
/// the remaining features sit at a different position than the previous
/// ranking predicted (previous order minus its head). Repeats until two
/// features remain, so an n-feature dataset takes exactly n - 2 steps.
NmrResult nmr(const Dataset& d, const Explainer& explainer);

struct NmrComparisonRow {
  std::string method;
  double nmr = 0.0;
};

/// NMR for the built-in explainers, one row each, in fixed order (aec first).
std::vector<NmrComparisonRow> nmr_comparison(const Dataset& d,
                                             const ExplainOptions& options = {});

}  // namespace aec
