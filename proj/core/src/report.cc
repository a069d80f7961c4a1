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

#include "vaguescore/report.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "vaguescore/error.h"
#include "vaguescore/io.h"
#include "vaguescore/text.h"

namespace vaguescore {

using nlohmann::json;

namespace {

json optional_decimal(const std::optional<Rational>& r) {
  return r ? decimal_json(*r) : json(nullptr);
}

json scores_to_json(const SentenceScores& s) {
  return {{"vagueness", decimal_json(s.vagueness)},
          {"subjectivity", decimal_json(s.subjectivity)},
          {"factual_vagueness", decimal_json(s.factual_vagueness)},
          {"detail", decimal_json(s.detail)},
          {"detail_vs_vagueness", optional_decimal(s.detail_vs_vagueness)}};
}

json sentence_to_json(const AnalyzedSentence& a,
                      const std::optional<SentenceScores>& scores) {
  json counts = json::object();
  for (const auto c : kAllCategories) {
    counts[std::string(category_label(c))] = count_of(a.counts, c);
  }
  json matches = json::array();
  for (const auto& m : a.matches) {
    matches.push_back(
        {{"term", m.entry.term},
         {"category", category_label(m.entry.category)},
         {"surface", m.surface},
         {"token_start", m.token_start},
         {"token_len", m.token_len},
         {"cancelled", m.cancelled},
         {"cancel_reason", m.cancel_reason
                               ? json(cancel_reason_label(*m.cancel_reason))
                               : json(nullptr)}});
  }
  json entities = json::array();
  for (const auto& e : a.entities) {
    std::string surface;
    for (std::size_t k = e.token_start;
         k < e.token_start + e.token_len && k < a.sentence.tokens.size(); ++k) {
      if (k > e.token_start) surface += ' ';
      surface += a.sentence.tokens[k].surface;
    }
    entities.push_back({{"start", e.token_start},
                        {"len", e.token_len},
                        {"kind", entity_kind_label(e.kind)},
                        {"text", surface}});
  }
  json j = {{"index", a.sentence.index},
            {"text", a.sentence.text},
            {"word_count", a.sentence.word_count},
            {"counts", counts},
            {"vague_count", a.vague_count()},
            {"entity_count", a.entity_count},
            {"scored", scores.has_value()}};
  if (scores) {
    j["scores"] = scores_to_json(*scores);
    j["labels"] = {{"vagueness", scores->vague ? "vague" : "precise"},
                   {"subjectivity", scores->opinion ? "opinion" : "fact"}};
  } else {
    j["scores"] = nullptr;
    j["labels"] = nullptr;
  }
  j["matches"] = std::move(matches);
  j["entities"] = std::move(entities);
  return j;
}

}  // namespace

double round6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return std::stod(buf);
}

json decimal_json(const Rational& r) { return std::stod(r.to_decimal(6)); }

json report_to_json(const DocumentReport& report) {
  json sentences = json::array();
  for (std::size_t i = 0; i < report.sentences.size(); ++i) {
    sentences.push_back(
        sentence_to_json(report.sentences[i], report.scores.at(i)));
  }
  const auto& t = report.text;
  return {{"schema_version", kReportSchemaVersion},
          {"doc_id", report.doc_id},
          {"label", report.label},
          {"language", report.language},
          {"excluded", report.excluded},
          {"sentences", std::move(sentences)},
          {"text_scores",
           {{"sentence_count", t.sentence_count},
            {"scored_sentence_count", t.scored_sentence_count},
            {"vagueness_rate", decimal_json(t.vagueness_rate)},
            {"subjectivity_rate", decimal_json(t.subjectivity_rate)},
            {"factual_rate", decimal_json(t.factual_rate)},
            {"mean_detail_vs_vagueness", round6(t.mean_detail_vs_vagueness)}}}};
}

DocumentReport report_from_json(const json& j) {
  try {
    const int version = j.at("schema_version").get<int>();
    if (version != kReportSchemaVersion) {
      throw SchemaError("report schema_version " + std::to_string(version) +
                        " is not supported (expected " +
                        std::to_string(kReportSchemaVersion) + ")");
    }
    DocumentReport report;
    report.doc_id = j.at("doc_id").get<std::string>();
    report.label = j.value("label", "");
    report.language = j.at("language").get<std::string>();
    for (const auto& js : j.at("sentences")) {
      auto sentence = make_sentence(js.at("text").get<std::string>(),
                                    js.at("index").get<std::size_t>());
      if (sentence.word_count != js.at("word_count").get<std::size_t>()) {
        throw SchemaError("sentence " + std::to_string(sentence.index) +
                          " of " + report.doc_id +
                          ": word_count disagrees with its text");
      }
      std::vector<VagueMatch> matches;
      for (const auto& jm : js.at("matches")) {
        VagueMatch m;
        m.entry.term = jm.at("term").get<std::string>();
        const auto category =
            parse_category(jm.at("category").get<std::string>());
        if (!category) throw SchemaError("unknown category in report");
        m.entry.category = *category;
        m.entry.language = report.language;
        m.surface = jm.value("surface", m.entry.term);
        m.token_start = jm.at("token_start").get<std::size_t>();
        m.token_len = jm.at("token_len").get<std::size_t>();
        m.cancelled = jm.at("cancelled").get<bool>();
        if (m.cancelled) {
          m.cancel_reason =
              parse_cancel_reason(jm.at("cancel_reason").get<std::string>());
          if (!m.cancel_reason) throw SchemaError("unknown cancel_reason");
        }
        matches.push_back(std::move(m));
      }
      std::vector<EntitySpan> entities;
      for (const auto& je : js.at("entities")) {
        const auto kind = parse_entity_kind(je.at("kind").get<std::string>());
        if (!kind) throw SchemaError("unknown entity kind in report");
        entities.push_back({je.at("start").get<std::size_t>(),
                            je.at("len").get<std::size_t>(), *kind});
      }
      auto analyzed = make_analyzed_sentence(
          std::move(sentence), std::move(matches), std::move(entities));
      if (analyzed.entity_count != js.at("entity_count").get<std::size_t>() ||
          analyzed.vague_count() != js.at("vague_count").get<std::size_t>()) {
        throw SchemaError("sentence counts disagree with matches in " +
                          report.doc_id);
      }
      report.sentences.push_back(std::move(analyzed));
    }
    rescore(report);
    return report;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed report: ") + e.what());
  }
}

std::string reports_to_jsonl(std::span<const DocumentReport> reports) {
  std::string out;
  for (const auto& r : reports) {
    out += report_to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::vector<DocumentReport> parse_reports(std::string_view content,
                                          const std::string& source_name) {
  std::vector<DocumentReport> reports;
  const auto trimmed = text::trim(content);
  if (trimmed.empty()) return reports;

  // A pretty-printed single report spans many lines.
  if (const auto whole = json::parse(trimmed, nullptr, false);
      !whole.is_discarded() && whole.is_object()) {
    reports.push_back(report_from_json(whole));
    return reports;
  }
  std::size_t line_no = 0;
  for (const auto line : text::split(content, '\n')) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    const auto j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw ParseError(source_name, line_no, "malformed JSON report");
    }
    reports.push_back(report_from_json(j));
  }
  return reports;
}

std::vector<DocumentReport> read_reports(const std::filesystem::path& path) {
  return parse_reports(read_text_file(path), path.string());
}

}  // namespace vaguescore
