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

#ifndef VAGUESCORE_ANALYZER_H_
#define VAGUESCORE_ANALYZER_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vaguescore/entities.h"
#include "vaguescore/lexicon.h"
#include "vaguescore/matcher.h"
#include "vaguescore/scoring.h"

namespace vaguescore {

// Everything computed for one document.
struct DocumentReport {
  std::string doc_id;
  std::string label;
  std::string language;
  std::vector<AnalyzedSentence> sentences;
  std::vector<std::optional<SentenceScores>> scores;  // parallel to sentences
  TextScores text;
  // No sentence could be scored (all were empty or punctuation-only).
  bool excluded = false;
};

// Segment, match, cancel, detect entities and score. Holds only immutable
// state, so one Analyzer can serve many threads.
class Analyzer {
 public:
  Analyzer(std::shared_ptr<const Lexicon> lexicon, CancellationRules rules);

  const Lexicon& lexicon() const { return *lexicon_; }
  const CancellationRules& rules() const { return rules_; }
  const std::string& language() const { return lexicon_->language(); }

  // When `annotations` holds spans for a (doc_id, sentence) pair they
  // replace the heuristic entities of that sentence entirely.
  DocumentReport analyze(std::string_view doc_id, std::string_view text,
                         const EntityAnnotations* annotations = nullptr,
                         std::string_view label = {}) const;

  AnalyzedSentence analyze_sentence(
      Sentence sentence, const CapitalizationContext* context = nullptr) const;

 private:
  std::shared_ptr<const Lexicon> lexicon_;
  CancellationRules rules_;
};

// Analyzer over the bundled seed lexicon and rule tables of `language`.
Analyzer make_bundled_analyzer(std::string_view language);

// Recomputes scores and text aggregates from the sentences' counts.
void rescore(DocumentReport& report);

}  // namespace vaguescore

#endif  // VAGUESCORE_ANALYZER_H_
