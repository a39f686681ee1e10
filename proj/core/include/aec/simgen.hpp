#pragma once

#include <cstdint>
#include <vector>

#include "aec/dataset.hpp"

namespace aec {

/// Recipe for a seeded synthetic dataset with deliberately collinear
/// structure: informative features are iid standard normal, each redundant
/// feature is a random linear combination of the informative block plus
/// Gaussian noise, and noise features are independent distractors. The
/// target is a weighted sum of the informative features (weights uniform in
/// [1, 100]) plus Gaussian noise; classification thresholds that latent
/// score at its sample median, which guarantees both classes.
struct SimSpec {
  Eigen::Index n_samples = 0;
  int n_informative = 0;
  int n_redundant = 0;
  int n_noise = 0;
  double redundant_noise_sd = 0.1;
  double target_noise_sd = 1.0;
  std::uint64_t seed = 0;
  TaskKind task = TaskKind::Regression;

  int n_features() const { return n_informative + n_redundant + n_noise; }
};

enum class FeatureRole { Informative, Redundant, Noise };

const char* to_string(FeatureRole role);

/// Deterministic generation: the same spec (seed included) always yields a
/// bit-identical dataset. Column positions are shuffled by a stream derived
/// from the seed; names ("inf_k" / "red_k" / "noise_k") travel with their
/// columns and record the ground-truth role.
Dataset generate(const SimSpec& spec);

/// Role of each feature column in post-shuffle order; consistent with the
/// names generate() assigns.
std::vector<FeatureRole> ground_truth(const SimSpec& spec);

}  // namespace aec
