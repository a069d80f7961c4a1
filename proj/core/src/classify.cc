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

#include "vaguescore/classify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "vaguescore/error.h"

namespace vaguescore {

using nlohmann::json;

namespace {

double softplus(double s) {
  return std::max(s, 0.0) + std::log1p(std::exp(-std::fabs(s)));
}

double sigmoid(double s) {
  if (s >= 0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

double score(const ModelParams& p, const FeatureRow& z) {
  double s = p[kFeatureCount];
  for (std::size_t k = 0; k < kFeatureCount; ++k) s += p[k] * z[k];
  return s;
}

std::vector<FeatureVector> sorted_by_id(std::span<const FeatureVector> f) {
  std::vector<FeatureVector> out(f.begin(), f.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const FeatureVector& a, const FeatureVector& b) {
                     return a.doc_id < b.doc_id;
                   });
  return out;
}

// Indices of `features` grouped by label, labels in sorted order.
std::map<std::string, std::vector<std::size_t>> by_label(
    std::span<const FeatureVector> features) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < features.size(); ++i) {
    groups[features[i].label].push_back(i);
  }
  return groups;
}

// Largest-remainder apportionment of `size` over the groups, at least one per
// group when there is room.
std::vector<std::size_t> apportion(
    const std::map<std::string, std::vector<std::size_t>>& groups,
    std::size_t total, std::size_t size) {
  std::vector<std::size_t> quota;
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  std::size_t g = 0;
  for (const auto& [label, members] : groups) {
    const double exact = static_cast<double>(size) *
                         static_cast<double>(members.size()) /
                         static_cast<double>(total);
    quota.push_back(static_cast<std::size_t>(std::floor(exact)));
    assigned += quota.back();
    remainders.emplace_back(exact - std::floor(exact), g++);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < size; ++k, ++assigned) {
    ++quota[remainders[k % remainders.size()].second];
  }
  if (size >= quota.size()) {
    for (std::size_t i = 0; i < quota.size(); ++i) {
      if (quota[i] > 0) continue;
      const auto donor = std::max_element(quota.begin(), quota.end());
      --*donor;
      quota[i] = 1;
    }
  }
  return quota;
}

}  // namespace

Standardizer::Standardizer(const FeatureRow& means, const FeatureRow& stds)
    : means_(means), stds_(stds) {
  for (const double s : stds_) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw Error("standardizer stds must be positive and finite");
    }
  }
}

Standardizer Standardizer::fit(std::span<const FeatureRow> rows) {
  FeatureRow means{}, stds{};
  stds.fill(1.0);
  if (rows.empty()) return Standardizer(means, stds);
  const double n = static_cast<double>(rows.size());
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    double sum = 0.0;
    for (const auto& r : rows) sum += r[k];
    means[k] = sum / n;
    double ss = 0.0;
    for (const auto& r : rows) ss += (r[k] - means[k]) * (r[k] - means[k]);
    const double sd = std::sqrt(ss / n);
    stds[k] = sd > 1e-12 ? sd : 1.0;
  }
  return Standardizer(means, stds);
}

FeatureRow Standardizer::transform(const FeatureRow& row) const {
  FeatureRow z;
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    z[k] = (row[k] - means_[k]) / stds_[k];
  }
  return z;
}

FeatureRow Standardizer::inverse(const FeatureRow& z) const {
  FeatureRow row;
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    row[k] = z[k] * stds_[k] + means_[k];
  }
  return row;
}

double logistic_objective(std::span<const FeatureRow> rows,
                          std::span<const double> targets,
                          const ModelParams& params, double l2,
                          ModelParams* gradient) {
  if (rows.size() != targets.size() || rows.empty()) {
    throw Error("logistic_objective needs matching, non-empty inputs");
  }
  const double n = static_cast<double>(rows.size());
  double loss = 0.0;
  if (gradient) gradient->fill(0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double s = score(params, rows[i]);
    loss += softplus(s) - targets[i] * s;
    if (gradient) {
      const double r = sigmoid(s) - targets[i];
      for (std::size_t k = 0; k < kFeatureCount; ++k) {
        (*gradient)[k] += r * rows[i][k];
      }
      (*gradient)[kFeatureCount] += r;
    }
  }
  loss /= n;
  double penalty = 0.0;
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    penalty += params[k] * params[k];
  }
  loss += 0.5 * l2 * penalty;
  if (gradient) {
    for (auto& g : *gradient) g /= n;
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      (*gradient)[k] += l2 * params[k];
    }
  }
  return loss;
}

double LinearModel::probability(const FeatureRow& row) const {
  return sigmoid(score(params, standardizer.transform(row)));
}

const std::string& LinearModel::predict(const FeatureRow& row) const {
  return probability(row) >= 0.5 ? classes[1] : classes[0];
}

LinearModel train(std::span<const FeatureVector> features,
                  const TrainConfig& config) {
  if (features.empty()) throw Error("cannot train on an empty feature set");
  if (!(config.learning_rate > 0.0) || config.l2 < 0.0) {
    throw Error("learning rate must be positive and l2 non-negative");
  }
  const auto sorted = sorted_by_id(features);
  std::set<std::string> labels;
  for (const auto& f : sorted) labels.insert(f.label);
  if (labels.size() < 2) {
    throw Error("training needs two classes; found only '" + *labels.begin() +
                "'");
  }
  if (labels.size() > 2) {
    throw Error("training supports two classes; found " +
                std::to_string(labels.size()));
  }

  LinearModel model;
  model.classes = {*labels.begin(), *labels.rbegin()};
  model.config = config;
  model.training_size = sorted.size();

  std::vector<FeatureRow> raw;
  std::vector<double> targets;
  for (const auto& f : sorted) {
    raw.push_back(f.values);
    targets.push_back(f.label == model.classes[1] ? 1.0 : 0.0);
  }
  model.standardizer = Standardizer::fit(raw);
  std::vector<FeatureRow> rows;
  rows.reserve(raw.size());
  for (const auto& r : raw) rows.push_back(model.standardizer.transform(r));

  model.params.fill(0.0);
  model.loss_trace.reserve(config.epochs + 1);
  ModelParams grad;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    model.loss_trace.push_back(
        logistic_objective(rows, targets, model.params, config.l2, &grad));
    for (std::size_t k = 0; k < model.params.size(); ++k) {
      model.params[k] -= config.learning_rate * grad[k];
    }
  }
  model.loss_trace.push_back(
      logistic_objective(rows, targets, model.params, config.l2));
  return model;
}

Evaluation evaluate(const LinearModel& model,
                    std::span<const FeatureVector> features) {
  Evaluation e;
  for (const auto& f : features) {
    const auto& predicted = model.predict(f.values);
    ++e.total;
    if (predicted == f.label) ++e.correct;
    ++e.confusion[{f.label, predicted}];
  }
  e.accuracy = e.total == 0 ? 0.0
                            : static_cast<double>(e.correct) /
                                  static_cast<double>(e.total);
  return e;
}

HoldoutSplit split_holdout(std::span<const FeatureVector> features,
                           double test_fraction, std::uint64_t seed) {
  if (!(test_fraction >= 0.0 && test_fraction < 1.0)) {
    throw Error("test fraction must be in [0, 1)");
  }
  const auto sorted = sorted_by_id(features);
  Random rng(mix_seed(seed, 0x5e11));
  HoldoutSplit split;
  for (auto& [label, members] : by_label(sorted)) {
    rng.shuffle(std::span(members));
    const auto n_test = static_cast<std::size_t>(
        std::llround(test_fraction * static_cast<double>(members.size())));
    for (std::size_t i = 0; i < members.size(); ++i) {
      (i < n_test ? split.test : split.train).push_back(sorted[members[i]]);
    }
  }
  split.train = sorted_by_id(split.train);
  split.test = sorted_by_id(split.test);
  return split;
}

std::vector<CurvePoint> learning_curve(std::span<const FeatureVector> pool,
                                       std::span<const FeatureVector> test,
                                       std::span<const std::size_t> sizes,
                                       const TrainConfig& config,
                                       std::size_t repeats) {
  if (repeats == 0) throw Error("learning curve needs at least one repeat");
  if (test.empty()) throw Error("learning curve needs a held-out set");
  const auto sorted = sorted_by_id(pool);
  const auto groups = by_label(sorted);
  std::vector<CurvePoint> curve;
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    const std::size_t size = sizes[s];
    if (size > sorted.size()) {
      throw Error("training size " + std::to_string(size) +
                  " exceeds the pool of " + std::to_string(sorted.size()));
    }
    if (size < 2) throw Error("training size must be at least 2");
    const auto quota = apportion(groups, sorted.size(), size);
    CurvePoint point;
    point.size = size;
    for (std::size_t r = 0; r < repeats; ++r) {
      Random rng(mix_seed(config.seed, size * 1000003ULL + r));
      std::vector<FeatureVector> subset;
      std::size_t g = 0;
      for (const auto& [label, members] : groups) {
        auto shuffled = members;
        rng.shuffle(std::span(shuffled));
        for (std::size_t i = 0; i < quota[g]; ++i) {
          subset.push_back(sorted[shuffled[i]]);
        }
        ++g;
      }
      point.accuracies.push_back(evaluate(train(subset, config), test).accuracy);
    }
    point.mean_accuracy = std::accumulate(point.accuracies.begin(),
                                          point.accuracies.end(), 0.0) /
                          static_cast<double>(repeats);
    double ss = 0.0;
    for (const double a : point.accuracies) {
      ss += (a - point.mean_accuracy) * (a - point.mean_accuracy);
    }
    point.std_accuracy = std::sqrt(ss / static_cast<double>(repeats));
    curve.push_back(std::move(point));
  }
  return curve;
}

json model_to_json(const LinearModel& m) {
  json weights = json::object();
  const auto names = feature_names();
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    weights[std::string(names[k])] = m.params[k];
  }
  return {{"schema_version", kModelSchemaVersion},
          {"kind", "logistic_regression"},
          {"classes", {m.classes[0], m.classes[1]}},
          {"positive_class", m.classes[1]},
          {"weights", std::move(weights)},
          {"bias", m.params[kFeatureCount]},
          {"feature_means", m.standardizer.means()},
          {"feature_stds", m.standardizer.stds()},
          {"config",
           {{"learning_rate", m.config.learning_rate},
            {"epochs", m.config.epochs},
            {"l2", m.config.l2},
            {"seed", m.config.seed}}},
          {"training_size", m.training_size},
          {"final_loss", m.loss_trace.empty() ? json(nullptr)
                                              : json(m.loss_trace.back())}};
}

LinearModel model_from_json(const json& j) {
  try {
    const int version = j.at("schema_version").get<int>();
    if (version != kModelSchemaVersion) {
      throw SchemaError("model schema_version " + std::to_string(version) +
                        " is not supported (expected " +
                        std::to_string(kModelSchemaVersion) + ")");
    }
    LinearModel m;
    const auto classes = j.at("classes").get<std::vector<std::string>>();
    if (classes.size() != 2) throw SchemaError("model needs two classes");
    m.classes = {classes[0], classes[1]};
    const auto names = feature_names();
    const auto& w = j.at("weights");
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      m.params[k] = w.at(std::string(names[k])).get<double>();
    }
    m.params[kFeatureCount] = j.at("bias").get<double>();
    m.standardizer = Standardizer(j.at("feature_means").get<FeatureRow>(),
                                  j.at("feature_stds").get<FeatureRow>());
    const auto& c = j.at("config");
    m.config.learning_rate = c.at("learning_rate").get<double>();
    m.config.epochs = c.at("epochs").get<std::size_t>();
    m.config.l2 = c.at("l2").get<double>();
    m.config.seed = c.at("seed").get<std::uint64_t>();
    m.training_size = j.value("training_size", std::size_t{0});
    if (const auto it = j.find("final_loss"); it != j.end() && !it->is_null()) {
      m.loss_trace.push_back(it->get<double>());
    }
    return m;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed model: ") + e.what());
  }
}

json evaluation_to_json(const Evaluation& e) {
  json confusion = json::array();
  for (const auto& [key, count] : e.confusion) {
    confusion.push_back(
        {{"true", key.first}, {"predicted", key.second}, {"count", count}});
  }
  return {{"total", e.total},
          {"correct", e.correct},
          {"accuracy", e.accuracy},
          {"confusion", std::move(confusion)}};
}

std::string curve_to_csv(std::span<const CurvePoint> curve) {
  std::string out = "size,mean_accuracy,std_accuracy\n";
  char buf[96];
  for (const auto& p : curve) {
    std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f\n", p.size, p.mean_accuracy,
                  p.std_accuracy);
    out += buf;
  }
  return out;
}

}  // namespace vaguescore
