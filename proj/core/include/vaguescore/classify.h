// Copyright 2026 The vaguescore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VAGUESCORE_CLASSIFY_H_
#define VAGUESCORE_CLASSIFY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "vaguescore/group_stats.h"
#include "vaguescore/random.h"

namespace vaguescore {

using FeatureRow = std::array<double, kFeatureCount>;
// Weights followed by the bias.
using ModelParams = std::array<double, kFeatureCount + 1>;

struct TrainConfig {
  double learning_rate = 0.25;
  std::size_t epochs = 2000;
  double l2 = 1e-3;
  std::uint64_t seed = kDefaultSeed;
};

// Zero-mean, unit-variance scaling. A constant column keeps std = 1.
class Standardizer {
 public:
  Standardizer() { stds_.fill(1.0); }
  Standardizer(const FeatureRow& means, const FeatureRow& stds);

  static Standardizer fit(std::span<const FeatureRow> rows);

  FeatureRow transform(const FeatureRow& row) const;
  FeatureRow inverse(const FeatureRow& row) const;

  const FeatureRow& means() const { return means_; }
  const FeatureRow& stds() const { return stds_; }

 private:
  FeatureRow means_{};
  FeatureRow stds_{};
};

// Mean logistic loss of `params` on standardized rows with 0/1 targets plus
// (l2 / 2) * |weights|^2; the bias is not penalized. Writes the gradient to
// `gradient` when it is non-null.
double logistic_objective(std::span<const FeatureRow> rows,
                          std::span<const double> targets,
                          const ModelParams& params, double l2,
                          ModelParams* gradient = nullptr);

struct LinearModel {
  // Sorted; classes[1] is the positive class.
  std::array<std::string, 2> classes;
  ModelParams params{};
  Standardizer standardizer;
  TrainConfig config;
  std::size_t training_size = 0;
  // Objective value before each epoch and after the last one. Only the last
  // value is serialized.
  std::vector<double> loss_trace;

  double probability(const FeatureRow& row) const;
  const std::string& predict(const FeatureRow& row) const;
};

// Binary L2 logistic regression by full-batch gradient descent from zero
// weights. Rows are sorted by doc id first, so the result does not depend on
// input order. Throws on empty or single-class input and on more than two
// labels.
LinearModel train(std::span<const FeatureVector> features,
                  const TrainConfig& config = {});

struct Evaluation {
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  // (true label, predicted label) -> count
  std::map<std::pair<std::string, std::string>, std::size_t> confusion;
};

Evaluation evaluate(const LinearModel& model,
                    std::span<const FeatureVector> features);

struct HoldoutSplit {
  std::vector<FeatureVector> train;
  std::vector<FeatureVector> test;
};

// Stratified split: round(fraction * n) documents of each label go to the
// test side. Both sides come back sorted by doc id.
HoldoutSplit split_holdout(std::span<const FeatureVector> features,
                           double test_fraction, std::uint64_t seed);

struct CurvePoint {
  std::size_t size = 0;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;  // population std over repeats
  std::vector<double> accuracies;
};

// For every size, trains on `repeats` seeded stratified subsets of `pool` and
// evaluates each model on `test`. Throws when a size exceeds the pool or is
// below 2.
std::vector<CurvePoint> learning_curve(std::span<const FeatureVector> pool,
                                       std::span<const FeatureVector> test,
                                       std::span<const std::size_t> sizes,
                                       const TrainConfig& config,
                                       std::size_t repeats);

inline constexpr int kModelSchemaVersion = 1;

nlohmann::json model_to_json(const LinearModel& model);
LinearModel model_from_json(const nlohmann::json& j);
nlohmann::json evaluation_to_json(const Evaluation& evaluation);
std::string curve_to_csv(std::span<const CurvePoint> curve);

}  // namespace vaguescore

#endif  // VAGUESCORE_CLASSIFY_H_
