#include "aec/simgen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "aec/errors.hpp"

namespace aec {

const char* to_string(FeatureRole role) {
  switch (role) {
    case FeatureRole::Informative: return "informative";
    case FeatureRole::Redundant: return "redundant";
    case FeatureRole::Noise: return "noise";
  }
  return "unknown";
}

namespace {

// Column shuffling uses its own stream so ground_truth() can reproduce the
// permutation without replaying the data draws.
constexpr std::uint64_t kShuffleStreamSalt = 0x9e3779b97f4a7c15ULL;

void check_spec(const SimSpec& spec) {
  if (spec.n_informative < 1) {
    throw InvalidArgument("simgen: n_informative must be at least 1");
  }
  if (spec.n_redundant < 0 || spec.n_noise < 0) {
    throw InvalidArgument("simgen: feature counts must be non-negative");
  }
  if (spec.n_features() < 2) {
    throw InvalidArgument("simgen: total feature count must be at least 2");
  }
  if (spec.n_samples < spec.n_features() + 2) {
    throw InvalidArgument("simgen: n_samples must be at least n_features + 2, got " +
                          std::to_string(spec.n_samples));
  }
  if (spec.redundant_noise_sd < 0.0 || spec.target_noise_sd < 0.0) {
    throw InvalidArgument("simgen: noise standard deviations must be non-negative");
  }
}

std::vector<Eigen::Index> shuffle_permutation(const SimSpec& spec) {
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(spec.n_features()));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(spec.seed ^ kShuffleStreamSalt);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<FeatureRole> roles_pre_shuffle(const SimSpec& spec) {
  std::vector<FeatureRole> roles;
  roles.reserve(static_cast<std::size_t>(spec.n_features()));
  roles.insert(roles.end(), static_cast<std::size_t>(spec.n_informative),
               FeatureRole::Informative);
  roles.insert(roles.end(), static_cast<std::size_t>(spec.n_redundant),
               FeatureRole::Redundant);
  roles.insert(roles.end(), static_cast<std::size_t>(spec.n_noise), FeatureRole::Noise);
  return roles;
}

}  // namespace

Dataset generate(const SimSpec& spec) {
  check_spec(spec);
  const Eigen::Index m = spec.n_samples;
  const Eigen::Index n = spec.n_features();

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> standard_normal(0.0, 1.0);

  // Draw order is part of the determinism contract: informative columns,
  // then per-redundant-feature weights and noise, then noise columns, then
  // target weights and target noise.
  Eigen::MatrixXd X(m, n);
  for (int j = 0; j < spec.n_informative; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) X(i, j) = standard_normal(rng);
  }
  const auto informative = X.leftCols(spec.n_informative);

  for (int r = 0; r < spec.n_redundant; ++r) {
    const Eigen::Index col = spec.n_informative + r;
    Eigen::VectorXd weights(spec.n_informative);
    for (int k = 0; k < spec.n_informative; ++k) weights(k) = standard_normal(rng);
    X.col(col) = informative * weights;
    if (spec.redundant_noise_sd > 0.0) {
      for (Eigen::Index i = 0; i < m; ++i) {
        X(i, col) += spec.redundant_noise_sd * standard_normal(rng);
      }
    } else {
      // Keep the stream position independent of the noise level.
      for (Eigen::Index i = 0; i < m; ++i) standard_normal(rng);
    }
  }

  for (int j = 0; j < spec.n_noise; ++j) {
    const Eigen::Index col = spec.n_informative + spec.n_redundant + j;
    for (Eigen::Index i = 0; i < m; ++i) X(i, col) = standard_normal(rng);
  }

  std::uniform_real_distribution<double> weight_dist(1.0, 100.0);
  Eigen::VectorXd target_weights(spec.n_informative);
  for (int k = 0; k < spec.n_informative; ++k) target_weights(k) = weight_dist(rng);

  Eigen::VectorXd latent = informative * target_weights;
  for (Eigen::Index i = 0; i < m; ++i) {
    latent(i) += spec.target_noise_sd * standard_normal(rng);
  }

  Eigen::VectorXd y(m);
  if (spec.task == TaskKind::Regression) {
    y = latent;
  } else {
    std::vector<double> sorted(latent.data(), latent.data() + m);
    std::nth_element(sorted.begin(), sorted.begin() + m / 2, sorted.end());
    double median = sorted[static_cast<std::size_t>(m / 2)];
    if (m % 2 == 0) {
      const double below =
          *std::max_element(sorted.begin(), sorted.begin() + m / 2);
      median = 0.5 * (median + below);
    }
    for (Eigen::Index i = 0; i < m; ++i) y(i) = latent(i) > median ? 1.0 : 0.0;
  }

  // Names record the ground-truth role before the positional shuffle.
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < spec.n_informative; ++j) {
    names.push_back("inf_" + std::to_string(j + 1));
  }
  for (int j = 0; j < spec.n_redundant; ++j) {
    names.push_back("red_" + std::to_string(j + 1));
  }
  for (int j = 0; j < spec.n_noise; ++j) {
    names.push_back("noise_" + std::to_string(j + 1));
  }

  const std::vector<Eigen::Index> perm = shuffle_permutation(spec);
  Eigen::MatrixXd shuffled(m, n);
  std::vector<std::string> shuffled_names(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    shuffled.col(j) = X.col(perm[static_cast<std::size_t>(j)]);
    shuffled_names[static_cast<std::size_t>(j)] =
        names[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
  }

  return Dataset(std::move(shuffled_names), std::move(shuffled), std::move(y),
                 spec.task);
}

std::vector<FeatureRole> ground_truth(const SimSpec& spec) {
  check_spec(spec);
  const std::vector<FeatureRole> roles = roles_pre_shuffle(spec);
  const std::vector<Eigen::Index> perm = shuffle_permutation(spec);
  std::vector<FeatureRole> shuffled(roles.size());
  for (std::size_t j = 0; j < roles.size(); ++j) {
    shuffled[j] = roles[static_cast<std::size_t>(perm[j])];
  }
  return shuffled;
}

}  // namespace aec
