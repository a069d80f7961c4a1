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

#include "vaguescore/scoring.h"

#include <stdexcept>

namespace vaguescore {

namespace {

Rational ratio(std::size_t num, std::size_t den) {
  return Rational(static_cast<std::int64_t>(num),
                  static_cast<std::int64_t>(den));
}

}  // namespace

AnalyzedSentence make_analyzed_sentence(Sentence sentence,
                                        std::vector<VagueMatch> matches,
                                        std::vector<EntitySpan> entities) {
  AnalyzedSentence a;
  a.sentence = std::move(sentence);
  a.matches = std::move(matches);
  a.entities = std::move(entities);
  for (const auto& m : a.matches) {
    if (!m.cancelled) ++count_of(a.counts, m.entry.category);
  }
  a.entity_count = a.entities.size();
  return a;
}

std::optional<SentenceScores> score_sentence(const AnalyzedSentence& analyzed) {
  const std::size_t n = analyzed.sentence.word_count;
  if (n == 0) return std::nullopt;

  const auto& c = analyzed.counts;
  const std::size_t subjective = count_of(c, VaguenessCategory::kDegree) +
                                 count_of(c, VaguenessCategory::kCombinatorial);
  const std::size_t factual = count_of(c, VaguenessCategory::kApproximation) +
                              count_of(c, VaguenessCategory::kGenerality);
  const std::size_t vague = subjective + factual;
  const std::size_t entities = analyzed.entity_count;

  SentenceScores s;
  s.vagueness = ratio(vague, n);
  s.subjectivity = ratio(subjective, n);
  s.factual_vagueness = ratio(factual, n);
  s.detail = ratio(entities, n);
  if (entities + vague > 0) {
    s.detail_vs_vagueness = ratio(entities, entities + vague);
  }
  s.vague = vague > 0;
  s.opinion = subjective > 0;
  return s;
}

TextScores score_text(
    std::span<const std::optional<SentenceScores>> sentences) {
  TextScores t;
  t.sentence_count = sentences.size();
  std::size_t vague = 0;
  std::size_t subjective = 0;
  std::size_t factual = 0;
  std::size_t defined = 0;
  Rational exact_sum;
  bool exact = true;
  double detail_sum = 0.0;
  for (const auto& s : sentences) {
    if (!s) continue;
    ++t.scored_sentence_count;
    if (s->vagueness.is_positive()) ++vague;
    if (s->subjectivity.is_positive()) ++subjective;
    if (s->factual_vagueness.is_positive()) ++factual;
    if (s->detail_vs_vagueness) {
      ++defined;
      detail_sum += s->detail_vs_vagueness->to_double();
      if (exact) {
        try {
          exact_sum = exact_sum + *s->detail_vs_vagueness;
        } catch (const std::overflow_error&) {
          exact = false;
        }
      }
    }
  }
  if (t.scored_sentence_count > 0) {
    t.vagueness_rate = ratio(vague, t.scored_sentence_count);
    t.subjectivity_rate = ratio(subjective, t.scored_sentence_count);
    t.factual_rate = ratio(factual, t.scored_sentence_count);
  }
  if (defined > 0) {
    // The exact sum keeps the mean independent of summation order.
    const double sum = exact ? exact_sum.to_double() : detail_sum;
    t.mean_detail_vs_vagueness = sum / static_cast<double>(defined);
  }
  return t;
}

}  // namespace vaguescore
