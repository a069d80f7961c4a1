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

#include "vaguescore/prc.h"

#include "vaguescore/corpus.h"
#include "vaguescore/error.h"
#include "vaguescore/io.h"

namespace vaguescore {

std::filesystem::path prc_fixture_path() {
  return data_dir() / "benchmark" / "prc.jsonl";
}

std::vector<PrcVerdict> classify_prc_benchmark(
    const Analyzer& analyzer, const std::filesystem::path& fixture) {
  if (!std::filesystem::exists(fixture)) {
    throw IoError("benchmark fixture not found: " + fixture.string());
  }
  const auto docs = load_corpus(fixture, analyzer.language());
  std::vector<PrcVerdict> verdicts;
  for (const auto& report : analyze_corpus(docs, analyzer)) {
    if (report.sentences.size() != 1 || !report.scores[0]) {
      throw Error("benchmark statement " + report.doc_id +
                  " is not a single scorable sentence");
    }
    const auto& s = *report.scores[0];
    PrcVerdict v;
    v.id = report.doc_id;
    v.text = report.sentences[0].sentence.text;
    v.survey_label = report.label;
    v.opinion = s.opinion;
    v.vague = s.vague;
    v.detail_vs_vagueness = s.detail_vs_vagueness;
    for (const auto& m : report.sentences[0].matches) {
      if (!m.cancelled) v.matched_terms.push_back(m.entry.term);
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

}  // namespace vaguescore
