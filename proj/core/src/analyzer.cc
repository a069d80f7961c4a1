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

#include "vaguescore/analyzer.h"

#include "vaguescore/error.h"
#include "vaguescore/io.h"
#include "vaguescore/segmenter.h"

namespace vaguescore {

Analyzer::Analyzer(std::shared_ptr<const Lexicon> lexicon,
                   CancellationRules rules)
    : lexicon_(std::move(lexicon)), rules_(std::move(rules)) {
  if (!lexicon_) throw Error("analyzer needs a lexicon");
  if (rules_.language != lexicon_->language()) {
    throw Error("cancellation rules are for " + rules_.language +
                ", lexicon is " + lexicon_->language());
  }
}

AnalyzedSentence Analyzer::analyze_sentence(
    Sentence sentence, const CapitalizationContext* context) const {
  auto matches = apply_cancellation(
      find_vague_terms(sentence, *lexicon_, rules_), sentence, rules_);
  auto entities = detect_entities(sentence, context);
  return make_analyzed_sentence(std::move(sentence), std::move(matches),
                                std::move(entities));
}

DocumentReport Analyzer::analyze(std::string_view doc_id,
                                 std::string_view text,
                                 const EntityAnnotations* annotations,
                                 std::string_view label) const {
  DocumentReport report;
  report.doc_id = std::string(doc_id);
  report.label = std::string(label);
  report.language = language();

  auto sentences = split_sentences(text, language());
  const CapitalizationContext context(sentences);
  report.sentences.reserve(sentences.size());
  for (auto& sentence : sentences) {
    const std::size_t index = sentence.index;
    auto analyzed = analyze_sentence(std::move(sentence), &context);
    if (annotations != nullptr) {
      const auto it = annotations->find({report.doc_id, index});
      if (it != annotations->end()) {
        validate_spans(it->second, analyzed.sentence);
        analyzed.entities = it->second;
        analyzed.entity_count = analyzed.entities.size();
      }
    }
    report.sentences.push_back(std::move(analyzed));
  }
  rescore(report);
  return report;
}

void rescore(DocumentReport& report) {
  report.scores.clear();
  report.scores.reserve(report.sentences.size());
  for (const auto& s : report.sentences) {
    report.scores.push_back(score_sentence(s));
  }
  report.text = score_text(report.scores);
  report.excluded = report.text.scored_sentence_count == 0;
}

Analyzer make_bundled_analyzer(std::string_view language) {
  auto lexicon = std::make_shared<const Lexicon>(
      load_lexicon(seed_lexicon_path(language), std::string(language)));
  return Analyzer(std::move(lexicon), bundled_cancellation_rules(language));
}

}  // namespace vaguescore
