#include "aec/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <utility>

#include "aec/errors.hpp"

namespace aec {

const char* to_string(TaskKind task) {
  return task == TaskKind::Regression ? "regression" : "classification";
}

Dataset::Dataset(std::vector<std::string> feature_names, Eigen::MatrixXd features,
                 Eigen::VectorXd target, TaskKind task)
    : feature_names_(std::move(feature_names)),
      features_(std::move(features)),
      target_(std::move(target)),
      task_(task) {
  if (static_cast<Eigen::Index>(feature_names_.size()) != features_.cols()) {
    throw InvalidArgument("dataset: " + std::to_string(feature_names_.size()) +
                          " feature names for " + std::to_string(features_.cols()) +
                          " columns");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : feature_names_) {
    if (!seen.insert(name).second) {
      throw InvalidArgument("dataset: duplicate feature name '" + name + "'");
    }
  }
  if (features_.rows() != target_.size()) {
    throw InvalidArgument("dataset: feature matrix has " +
                          std::to_string(features_.rows()) + " rows but target has " +
                          std::to_string(target_.size()));
  }
  if (features_.rows() < 3) {
    throw InvalidArgument("dataset: needs at least 3 samples, got " +
                          std::to_string(features_.rows()));
  }
  if (features_.cols() < 2) {
    throw InvalidArgument("dataset: needs at least 2 features, got " +
                          std::to_string(features_.cols()));
  }
  if (!features_.allFinite()) {
    throw InvalidArgument("dataset: feature matrix contains NaN or infinite values");
  }
  if (!target_.allFinite()) {
    throw InvalidArgument("dataset: target contains NaN or infinite values");
  }
  if (task_ == TaskKind::BinaryClassification) {
    bool saw_zero = false;
    bool saw_one = false;
    for (Eigen::Index i = 0; i < target_.size(); ++i) {
      const double v = target_(i);
      if (v == 0.0) {
        saw_zero = true;
      } else if (v == 1.0) {
        saw_one = true;
      } else {
        throw InvalidArgument("dataset: classification target value " +
                              std::to_string(v) + " at row " + std::to_string(i) +
                              " is outside {0, 1}");
      }
    }
    if (!saw_zero || !saw_one) {
      throw InvalidArgument("dataset: classification target must contain both classes");
    }
  }
}

Eigen::Index Dataset::feature_index(const std::string& name) const {
  for (std::size_t j = 0; j < feature_names_.size(); ++j) {
    if (feature_names_[j] == name) return static_cast<Eigen::Index>(j);
  }
  throw InvalidArgument("dataset: no feature named '" + name + "'");
}

Dataset Dataset::without_feature(Eigen::Index j) const {
  if (j < 0 || j >= n_features()) {
    throw InvalidArgument("dataset: feature index " + std::to_string(j) +
                          " out of range");
  }
  std::vector<std::string> names;
  names.reserve(feature_names_.size() - 1);
  Eigen::MatrixXd reduced(n_samples(), n_features() - 1);
  Eigen::Index out = 0;
  for (Eigen::Index c = 0; c < n_features(); ++c) {
    if (c == j) continue;
    names.push_back(feature_names_[c]);
    reduced.col(out++) = features_.col(c);
  }
  return Dataset(std::move(names), std::move(reduced), target_, task_);
}

namespace {

// Centered columns plus their sum of squares; throws if a column is constant.
struct Centered {
  Eigen::MatrixXd cols;
  Eigen::VectorXd sumsq;
};

Centered center_features(const Dataset& d) {
  Centered out;
  out.cols = d.features();
  out.sumsq.resize(d.n_features());
  for (Eigen::Index j = 0; j < d.n_features(); ++j) {
    const double mean = out.cols.col(j).mean();
    out.cols.col(j).array() -= mean;
    out.sumsq(j) = out.cols.col(j).squaredNorm();
    if (out.sumsq(j) == 0.0) {
      throw InvalidArgument("zero-variance feature '" + d.feature_names()[j] + "'");
    }
  }
  return out;
}

}  // namespace

CorrelationMatrix correlation_matrix(const Dataset& d) {
  const Centered c = center_features(d);
  const Eigen::Index n = d.n_features();

  CorrelationMatrix result;
  result.names = d.feature_names();
  result.values = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    result.values(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double r = c.cols.col(i).dot(c.cols.col(j)) /
                 std::sqrt(c.sumsq(i) * c.sumsq(j));
      r = std::clamp(r, -1.0, 1.0);
      result.values(i, j) = r;
      result.values(j, i) = r;
    }
  }
  return result;
}

Dataset standardize(const Dataset& d) {
  Centered c = center_features(d);
  const double denom = static_cast<double>(d.n_samples() - 1);
  for (Eigen::Index j = 0; j < d.n_features(); ++j) {
    const double sd = std::sqrt(c.sumsq(j) / denom);
    c.cols.col(j) /= sd;
  }
  return Dataset(d.feature_names(), std::move(c.cols), d.target(), d.task());
}

}  // namespace aec
