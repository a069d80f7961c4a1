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

#ifndef VAGUESCORE_GROUP_STATS_H_
#define VAGUESCORE_GROUP_STATS_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "vaguescore/analyzer.h"
#include "vaguescore/stats.h"

namespace vaguescore {

enum class Metric { kVaguenessRate, kSubjectivityRate, kMeanDetailVsVagueness };

inline constexpr std::array<Metric, 3> kAllMetrics = {
    Metric::kVaguenessRate, Metric::kSubjectivityRate,
    Metric::kMeanDetailVsVagueness};

std::string_view metric_name(Metric metric);
double metric_value(const TextScores& scores, Metric metric);

inline constexpr double kFamilyAlpha = 0.05;

struct MetricComparison {
  Metric metric = Metric::kVaguenessRate;
  stats::WelchResult welch;
  bool significant = false;  // p < alpha / family size
};

struct GroupComparison {
  std::string label_a;
  std::string label_b;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  double alpha = kFamilyAlpha;
  double threshold = kFamilyAlpha / kAllMetrics.size();
  std::array<MetricComparison, 3> metrics;
};

// Welch test per metric on per-document text scores, Bonferroni-corrected
// over the three metrics. Excluded documents are skipped. Each label needs
// at least two documents.
GroupComparison compare_groups(std::span<const DocumentReport> reports,
                               std::string_view label_a,
                               std::string_view label_b,
                               double alpha = kFamilyAlpha);

inline constexpr int kComparisonSchemaVersion = 1;
nlohmann::json comparison_to_json(const GroupComparison& comparison);

inline constexpr std::size_t kFeatureCount = 12;

// {min, median, mean, max} of the sentence vagueness, subjectivity and
// detail_vs_vagueness ratios, in that order.
struct FeatureVector {
  std::string doc_id;
  std::string label;
  std::array<double, kFeatureCount> values{};

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

std::span<const std::string_view, kFeatureCount> feature_names();

// Throws for an excluded document. Sentences whose detail_vs_vagueness is
// undefined are left out of the detail statistics.
FeatureVector extract_features(const DocumentReport& report);

// Comma-separated table with a fixed header; values carry six decimals.
std::string features_to_csv(std::span<const FeatureVector> features);
std::vector<FeatureVector> parse_features_csv(std::istream& in,
                                              const std::string& source_name =
                                                  "<features>");

}  // namespace vaguescore

#endif  // VAGUESCORE_GROUP_STATS_H_
