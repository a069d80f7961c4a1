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

// Command-line front end: scoring, corpus runs, group statistics, the
// feature classifier and the lexicon/pairs interchange files.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vaguescore/analyzer.h"
#include "vaguescore/classify.h"
#include "vaguescore/corpus.h"
#include "vaguescore/error.h"
#include "vaguescore/group_stats.h"
#include "vaguescore/io.h"
#include "vaguescore/lexicon.h"
#include "vaguescore/matcher.h"
#include "vaguescore/random.h"
#include "vaguescore/report.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace vaguescore {
namespace {

constexpr int kPairsSchemaVersion = 1;

struct RunConfig {
  std::string language = "en";
  std::vector<std::string> lexicons;
  std::string comparatives;
  std::string units;
  std::string entities;
  std::string out;
  std::uint64_t seed = kDefaultSeed;
  std::size_t threads = 1;
};

void emit(const RunConfig& config, const std::string& content) {
  if (config.out.empty()) {
    std::cout << content;
    std::cout.flush();
  } else {
    write_file_atomic(config.out, content);
  }
}

Lexicon load_lexicons(const RunConfig& config) {
  if (config.lexicons.empty()) {
    return load_lexicon(seed_lexicon_path(config.language), config.language);
  }
  Lexicon merged(config.language);
  for (const auto& path : config.lexicons) {
    merged = merge_lexicons(merged, load_lexicon(path, config.language));
  }
  return merged;
}

Analyzer make_analyzer(const RunConfig& config) {
  auto lexicon = std::make_shared<const Lexicon>(load_lexicons(config));
  CancellationRules rules;
  if (config.comparatives.empty() && config.units.empty()) {
    rules = bundled_cancellation_rules(config.language);
  } else {
    rules = load_cancellation_rules(
        config.language,
        config.comparatives.empty() ? comparatives_path(config.language)
                                    : fs::path(config.comparatives),
        config.units.empty() ? units_path(config.language)
                             : fs::path(config.units));
  }
  return Analyzer(std::move(lexicon), std::move(rules));
}

std::optional<EntityAnnotations> load_entities(const RunConfig& config) {
  if (config.entities.empty()) return std::nullopt;
  return ingest_annotations(config.entities);
}

std::vector<FeatureVector> load_features(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open feature table " + path);
  return parse_features_csv(in, path);
}

std::vector<FeatureVector> holdout_side(std::vector<FeatureVector> features,
                                        double fraction, std::uint64_t seed,
                                        bool test_side) {
  if (fraction <= 0.0) return features;
  auto split = split_holdout(features, fraction, seed);
  return test_side ? std::move(split.test) : std::move(split.train);
}

int cmd_score(const RunConfig& config, const std::string& input,
              const std::optional<std::string>& literal,
              const std::string& doc_id) {
  std::string text;
  if (literal) {
    text = *literal;
  } else if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    text = read_text_file(input);
  }
  const auto analyzer = make_analyzer(config);
  const auto annotations = load_entities(config);
  const auto report = analyzer.analyze(
      doc_id, text, annotations ? &*annotations : nullptr);
  emit(config, report_to_json(report).dump(2) + "\n");
  return 0;
}

int cmd_corpus(const RunConfig& config, const std::string& path) {
  const auto docs = load_corpus(path, config.language);
  const auto analyzer = make_analyzer(config);
  const auto annotations = load_entities(config);
  const auto reports = analyze_corpus(
      docs, analyzer, annotations ? &*annotations : nullptr, config.threads);
  emit(config, reports_to_jsonl(reports));
  const auto summary = summarize(reports);
  std::cerr << summary.processed << " processed, " << summary.excluded
            << " excluded\n";
  return 0;
}

int cmd_compare(const RunConfig& config, const std::string& path,
                const std::vector<std::string>& labels) {
  const auto reports = read_reports(path);
  const auto comparison = compare_groups(reports, labels.at(0), labels.at(1));
  emit(config, comparison_to_json(comparison).dump(2) + "\n");
  return 0;
}

int cmd_features(const RunConfig& config, const std::string& path) {
  std::vector<FeatureVector> rows;
  std::size_t skipped = 0;
  for (const auto& report : read_reports(path)) {
    if (report.excluded) {
      ++skipped;
      continue;
    }
    rows.push_back(extract_features(report));
  }
  emit(config, features_to_csv(rows));
  if (skipped > 0) {
    std::cerr << skipped << " excluded documents have no feature row\n";
  }
  return 0;
}

int cmd_train(const RunConfig& config, const std::string& path,
              TrainConfig train_config, double holdout) {
  train_config.seed = config.seed;
  const auto rows =
      holdout_side(load_features(path), holdout, config.seed, false);
  emit(config, model_to_json(train(rows, train_config)).dump(2) + "\n");
  return 0;
}

int cmd_eval(const RunConfig& config, const std::string& model_path,
             const std::string& features_path, double holdout) {
  const auto model =
      model_from_json(json::parse(read_text_file(model_path)));
  const auto rows =
      holdout_side(load_features(features_path), holdout, config.seed, true);
  if (rows.empty()) throw Error("evaluation set is empty");
  emit(config, evaluation_to_json(evaluate(model, rows)).dump(2) + "\n");
  return 0;
}

int cmd_curve(const RunConfig& config, const std::string& path,
              TrainConfig train_config, const std::vector<std::size_t>& sizes,
              std::size_t repeats, double holdout) {
  train_config.seed = config.seed;
  const auto split = split_holdout(load_features(path), holdout, config.seed);
  const auto curve =
      learning_curve(split.train, split.test, sizes, train_config, repeats);
  emit(config, curve_to_csv(curve));
  return 0;
}

int cmd_export_pairs(const RunConfig& config, const std::string& path) {
  const auto reports = read_reports(path);
  std::string body;
  std::size_t count = 0;
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.sentences.size(); ++i) {
      const auto& s = r.scores[i];
      if (!s) continue;
      const json detail = s->detail_vs_vagueness
                              ? decimal_json(*s->detail_vs_vagueness)
                              : json(nullptr);
      body += json{{"id", r.doc_id},
                   {"sent_index", r.sentences[i].sentence.index},
                   {"text", r.sentences[i].sentence.text},
                   {"subjective", decimal_json(s->subjectivity)},
                   {"factual", decimal_json(s->factual_vagueness)},
                   {"detail_vague", detail}}
                  .dump();
      body += '\n';
      ++count;
    }
  }
  const json header = {{"type", "header"},
                       {"schema_version", kPairsSchemaVersion},
                       {"language", reports.empty() ? config.language
                                                    : reports.front().language},
                       {"targets", {"subjective", "factual", "detail_vague"}},
                       {"count", count}};
  emit(config, header.dump() + "\n" + body);
  return 0;
}

int cmd_merge_lexicon(const RunConfig& config,
                      const std::vector<std::string>& inputs) {
  Lexicon merged(config.language);
  for (const auto& path : inputs) {
    merged = merge_lexicons(merged, load_lexicon(path, config.language));
  }
  emit(config, to_tsv(merged));
  std::cerr << merged.size() << " entries\n";
  return 0;
}

void add_train_options(CLI::App* cmd, TrainConfig& tc) {
  cmd->add_option("--learning-rate", tc.learning_rate,
                  "Gradient descent step size")
      ->capture_default_str();
  cmd->add_option("--epochs", tc.epochs, "Full-batch iterations")
      ->capture_default_str();
  cmd->add_option("--l2", tc.l2, "L2 penalty on the weights")
      ->capture_default_str();
}

int run(int argc, char** argv) {
  CLI::App app{"Lexicon-based vagueness, subjectivity and detail scoring"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  app.add_option("--lang", config.language, "ISO 639-1 language of the input")
      ->capture_default_str();
  app.add_option("--lexicon", config.lexicons,
                 "Lexicon TSV (repeatable; default: bundled seed lexicon)");
  app.add_option("--comparatives", config.comparatives,
                 "Comparative/inflection table (default: bundled)");
  app.add_option("--units", config.units, "Unit table (default: bundled)");
  app.add_option("--entities", config.entities,
                 "Entity annotations (JSONL) replacing heuristic spans");
  app.add_option("--out", config.out, "Output file (default: stdout)");
  app.add_option("--seed", config.seed, "Seed for every random choice")
      ->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads for corpus runs")
      ->capture_default_str()
      ->check(CLI::Range(1, 256));

  std::string input;
  std::optional<std::string> literal;
  std::string doc_id = "input";
  auto* score = app.add_subcommand("score", "Score one text");
  score->add_option("input", input, "Text file, or - for stdin");
  score->add_option("--text", literal, "Score this string");
  score->add_option("--id", doc_id, "Document id in the report")
      ->capture_default_str();

  std::string corpus_path;
  auto* corpus = app.add_subcommand("corpus", "Score a JSONL corpus");
  corpus->add_option("corpus", corpus_path, "Corpus JSONL")->required();

  std::string reports_path;
  std::vector<std::string> labels;
  auto* compare = app.add_subcommand("compare", "Compare two labelled groups");
  compare->add_option("reports", reports_path, "Reports JSONL")->required();
  compare->add_option("--labels", labels, "The two labels to compare")
      ->required()
      ->expected(2);

  auto* features = app.add_subcommand("features", "Per-document feature table");
  features->add_option("reports", reports_path, "Reports JSONL")->required();

  std::string features_path;
  TrainConfig train_config;
  double holdout = 0.0;
  auto* train_cmd = app.add_subcommand("train", "Train the feature classifier");
  train_cmd->add_option("features", features_path, "Feature CSV")->required();
  add_train_options(train_cmd, train_config);
  train_cmd->add_option("--holdout", holdout,
                        "Train only on the training side of a seeded split")
      ->check(CLI::Range(0.0, 0.99));

  std::string model_path;
  auto* eval = app.add_subcommand("eval", "Evaluate a trained model");
  eval->add_option("model", model_path, "Model JSON")->required();
  eval->add_option("features", features_path, "Feature CSV")->required();
  eval->add_option("--holdout", holdout,
                   "Evaluate only the test side of a seeded split")
      ->check(CLI::Range(0.0, 0.99));

  std::vector<std::size_t> sizes = {50, 200, 400};
  std::size_t repeats = 5;
  double curve_holdout = 0.2;
  auto* curve = app.add_subcommand("curve", "Learning curve over subset sizes");
  curve->add_option("features", features_path, "Feature CSV")->required();
  curve->add_option("--sizes", sizes, "Training-set sizes")
      ->delimiter(',')
      ->capture_default_str();
  curve->add_option("--repeats", repeats, "Subsets per size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  curve->add_option("--holdout", curve_holdout, "Held-out fraction")
      ->capture_default_str()
      ->check(CLI::Range(0.01, 0.99));
  add_train_options(curve, train_config);

  auto* pairs = app.add_subcommand("export-pairs",
                                   "Sentence/score pairs for model training");
  pairs->add_option("reports", reports_path, "Reports JSONL")->required();

  std::vector<std::string> merge_inputs;
  auto* merge = app.add_subcommand(
      "merge-lexicon", "Merge lexicon or enrichment-candidate TSV files");
  merge->add_option("inputs", merge_inputs, "Lexicon files")
      ->required()
      ->expected(1, -1);

  CLI11_PARSE(app, argc, argv);

  if (!is_language_code(config.language)) {
    throw Error("--lang must be a two-letter code, got '" + config.language +
                "'");
  }
  if (score->parsed()) {
    if (literal && !input.empty()) {
      throw Error("score takes either a file or --text, not both");
    }
    return cmd_score(config, input, literal, doc_id);
  }
  if (corpus->parsed()) return cmd_corpus(config, corpus_path);
  if (compare->parsed()) return cmd_compare(config, reports_path, labels);
  if (features->parsed()) return cmd_features(config, reports_path);
  if (train_cmd->parsed()) {
    return cmd_train(config, features_path, train_config, holdout);
  }
  if (eval->parsed()) return cmd_eval(config, model_path, features_path, holdout);
  if (curve->parsed()) {
    return cmd_curve(config, features_path, train_config, sizes, repeats,
                     curve_holdout);
  }
  if (pairs->parsed()) return cmd_export_pairs(config, reports_path);
  if (merge->parsed()) return cmd_merge_lexicon(config, merge_inputs);
  return 1;
}

}  // namespace
}  // namespace vaguescore

int main(int argc, char** argv) {
  try {
    return vaguescore::run(argc, argv);
  } catch (const vaguescore::SchemaError& e) {
    std::cerr << "vaguescore: schema error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "vaguescore: " << e.what() << "\n";
    return 1;
  }
}
