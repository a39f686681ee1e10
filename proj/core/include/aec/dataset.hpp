#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace aec {

enum class TaskKind { Regression, BinaryClassification };

const char* to_string(TaskKind task);

/// Named numeric feature matrix plus target vector. Immutable once built;
/// safe for concurrent reads. The constructor enforces:
///  - unique feature names, one per column
///  - finite entries everywhere
///  - at least 3 samples and 2 features
///  - for BinaryClassification, target values in {0, 1} with both present
class Dataset {
 public:
  Dataset(std::vector<std::string> feature_names, Eigen::MatrixXd features,
          Eigen::VectorXd target, TaskKind task);

  const std::vector<std::string>& feature_names() const { return feature_names_; }
  const Eigen::MatrixXd& features() const { return features_; }
  const Eigen::VectorXd& target() const { return target_; }
  TaskKind task() const { return task_; }

  Eigen::Index n_samples() const { return features_.rows(); }
  Eigen::Index n_features() const { return features_.cols(); }

  Eigen::MatrixXd::ConstColXpr feature(Eigen::Index j) const {
    return features_.col(j);
  }

  /// Index of a named feature; throws InvalidArgument if absent.
  Eigen::Index feature_index(const std::string& name) const;

  /// Copy with feature j removed; remaining column order preserved.
  Dataset without_feature(Eigen::Index j) const;

 private:
  std::vector<std::string> feature_names_;
  Eigen::MatrixXd features_;
  Eigen::VectorXd target_;
  TaskKind task_;
};

/// Symmetric Pearson correlation matrix with exact unit diagonal and all
/// entries clamped to [-1, 1].
struct CorrelationMatrix {
  std::vector<std::string> names;
  Eigen::MatrixXd values;
};

/// Pearson correlation of every feature pair. Throws InvalidArgument naming
/// the column if any feature has zero variance.
CorrelationMatrix correlation_matrix(const Dataset& d);

/// Rescales every feature to mean 0 and sample standard deviation 1 (n-1
/// denominator). Target and task are unchanged. Throws on zero-variance
/// columns.
Dataset standardize(const Dataset& d);

}  // namespace aec
