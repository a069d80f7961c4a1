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

#include "vaguescore/group_stats.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>

#include "vaguescore/error.h"
#include "vaguescore/text.h"

namespace vaguescore {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "vag_min",  "vag_med",  "vag_mean",  "vag_max",
    "subj_min", "subj_med", "subj_mean", "subj_max",
    "det_min",  "det_med",  "det_mean",  "det_max"};

void put_stats(const stats::Summary& s, std::size_t offset,
               std::array<double, kFeatureCount>& out) {
  out[offset] = s.min;
  out[offset + 1] = s.median;
  out[offset + 2] = s.mean;
  out[offset + 3] = s.max;
}

bool needs_quotes(std::string_view field) {
  return field.find_first_of(",\"\r\n") != std::string_view::npos;
}

void append_field(std::string& out, std::string_view field) {
  if (field.find_first_of("\r\n") != std::string_view::npos) {
    throw Error("CSV field contains a line break: " + std::string(field));
  }
  if (!needs_quotes(field)) {
    out += field;
    return;
  }
  out += '"';
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

// Splits one CSV record; double quotes escape commas and quotes.
std::vector<std::string> split_csv(std::string_view line,
                                   const std::string& source,
                                   std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"' && fields.back().empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError(source, line_no, "unterminated quoted field");
  return fields;
}

std::string csv_header() {
  std::string h = "doc_id,label";
  for (const auto name : kFeatureNames) {
    h += ',';
    h += name;
  }
  return h;
}

}  // namespace

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::kVaguenessRate:
      return "vagueness_rate";
    case Metric::kSubjectivityRate:
      return "subjectivity_rate";
    case Metric::kMeanDetailVsVagueness:
      return "mean_detail_vs_vagueness";
  }
  return "?";
}

double metric_value(const TextScores& scores, Metric metric) {
  switch (metric) {
    case Metric::kVaguenessRate:
      return scores.vagueness_rate.to_double();
    case Metric::kSubjectivityRate:
      return scores.subjectivity_rate.to_double();
    case Metric::kMeanDetailVsVagueness:
      return scores.mean_detail_vs_vagueness;
  }
  return 0.0;
}

GroupComparison compare_groups(std::span<const DocumentReport> reports,
                               std::string_view label_a,
                               std::string_view label_b, double alpha) {
  if (label_a == label_b) throw Error("compare needs two distinct labels");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must be in (0, 1)");
  std::array<std::vector<double>, 3> a, b;
  for (const auto& r : reports) {
    if (r.excluded) continue;
    auto* side = r.label == label_a ? &a : r.label == label_b ? &b : nullptr;
    if (side == nullptr) continue;
    for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
      (*side)[m].push_back(metric_value(r.text, kAllMetrics[m]));
    }
  }
  for (const auto& [label, group] : {std::pair{label_a, &a}, {label_b, &b}}) {
    const std::size_t n = (*group)[0].size();
    if (n < 2) {
      throw Error("label '" + std::string(label) + "' has " +
                  std::to_string(n) +
                  " scored documents; at least 2 are needed");
    }
  }

  GroupComparison c;
  c.label_a = label_a;
  c.label_b = label_b;
  c.size_a = a[0].size();
  c.size_b = b[0].size();
  c.alpha = alpha;
  c.threshold = alpha / static_cast<double>(kAllMetrics.size());
  for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
    auto& mc = c.metrics[m];
    mc.metric = kAllMetrics[m];
    mc.welch = stats::welch_t_test(a[m], b[m]);
    mc.significant = mc.welch.p < c.threshold;
  }
  return c;
}

json comparison_to_json(const GroupComparison& c) {
  json metrics = json::array();
  for (const auto& m : c.metrics) {
    // JSON has no infinity; a degenerate statistic is written as null.
    const json t = std::isfinite(m.welch.t) ? json(m.welch.t) : json(nullptr);
    metrics.push_back({{"metric", metric_name(m.metric)},
                       {"mean_a", m.welch.mean_a},
                       {"mean_b", m.welch.mean_b},
                       {"t", t},
                       {"t_sign", m.welch.t > 0 ? 1 : m.welch.t < 0 ? -1 : 0},
                       {"df", m.welch.df},
                       {"p", m.welch.p},
                       {"significant", m.significant}});
  }
  return {{"schema_version", kComparisonSchemaVersion},
          {"label_a", c.label_a},
          {"label_b", c.label_b},
          {"n_a", c.size_a},
          {"n_b", c.size_b},
          {"alpha", c.alpha},
          {"bonferroni_threshold", c.threshold},
          {"metrics", std::move(metrics)}};
}

std::span<const std::string_view, kFeatureCount> feature_names() {
  return kFeatureNames;
}

FeatureVector extract_features(const DocumentReport& report) {
  if (report.excluded) {
    throw Error("document '" + report.doc_id +
                "' has no scored sentence and yields no features");
  }
  std::vector<double> vag, subj, det;
  for (const auto& s : report.scores) {
    if (!s) continue;
    vag.push_back(s->vagueness.to_double());
    subj.push_back(s->subjectivity.to_double());
    if (s->detail_vs_vagueness) det.push_back(s->detail_vs_vagueness->to_double());
  }
  FeatureVector f{report.doc_id, report.label, {}};
  put_stats(stats::summarize(vag), 0, f.values);
  put_stats(stats::summarize(subj), 4, f.values);
  put_stats(stats::summarize(det), 8, f.values);
  return f;
}

std::string features_to_csv(std::span<const FeatureVector> features) {
  std::string out = csv_header() + "\n";
  char buf[32];
  for (const auto& f : features) {
    append_field(out, f.doc_id);
    out += ',';
    append_field(out, f.label);
    for (const double v : f.values) {
      std::snprintf(buf, sizeof buf, ",%.6f", v);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::vector<FeatureVector> parse_features_csv(std::istream& in,
                                              const std::string& source) {
  std::vector<FeatureVector> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) continue;
    if (!header_seen) {
      if (line != csv_header()) {
        throw ParseError(source, line_no, "unexpected feature table header");
      }
      header_seen = true;
      continue;
    }
    const auto fields = split_csv(line, source, line_no);
    if (fields.size() != 2 + kFeatureCount) {
      throw ParseError(source, line_no,
                       "expected " + std::to_string(2 + kFeatureCount) +
                           " columns, found " + std::to_string(fields.size()));
    }
    FeatureVector f;
    f.doc_id = fields[0];
    f.label = fields[1];
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      const auto& field = fields[2 + k];
      double v = 0.0;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size() ||
          !std::isfinite(v)) {
        throw ParseError(source, line_no,
                         "column " + std::string(kFeatureNames[k]) +
                             " is not a number: '" + field + "'");
      }
      f.values[k] = v;
    }
    rows.push_back(std::move(f));
  }
  if (!header_seen) throw ParseError(source, 0, "missing feature table header");
  return rows;
}

}  // namespace vaguescore
