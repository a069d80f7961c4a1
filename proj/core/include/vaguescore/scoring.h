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

#ifndef VAGUESCORE_SCORING_H_
#define VAGUESCORE_SCORING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vaguescore/entities.h"
#include "vaguescore/lexicon.h"
#include "vaguescore/matcher.h"
#include "vaguescore/rational.h"
#include "vaguescore/segmenter.h"

namespace vaguescore {

struct AnalyzedSentence {
  Sentence sentence;
  std::vector<VagueMatch> matches;  // after cancellation, cancelled included
  std::vector<EntitySpan> entities;
  CategoryCounts counts{};  // uncancelled matches only
  std::size_t entity_count = 0;

  std::size_t vague_count() const {
    return counts[0] + counts[1] + counts[2] + counts[3];
  }
};

// Fills in the tallies from `matches` and `entities`.
AnalyzedSentence make_analyzed_sentence(Sentence sentence,
                                        std::vector<VagueMatch> matches,
                                        std::vector<EntitySpan> entities);

// Sentence-level ratios, all over the word count N:
//   vagueness         = (|V_A| + |V_G| + |V_D| + |V_C|) / N
//   subjectivity      = (|V_D| + |V_C|) / N
//   factual_vagueness = (|V_A| + |V_G|) / N
//   detail            = |P| / N
//   detail_vs_vagueness = |P| / (|P| + |V|), absent when both are zero.
// A multiword match counts once in its category while each of its tokens
// counts in N.
struct SentenceScores {
  Rational vagueness;
  Rational subjectivity;
  Rational factual_vagueness;
  Rational detail;
  std::optional<Rational> detail_vs_vagueness;
  bool vague = false;    // vagueness > 0
  bool opinion = false;  // subjectivity > 0

  friend bool operator==(const SentenceScores&,
                         const SentenceScores&) = default;
};

// Returns nothing for a sentence without words (N = 0), which is unscorable.
std::optional<SentenceScores> score_sentence(const AnalyzedSentence& analyzed);

// Text-level aggregation over scored sentences. Rates are the fraction of
// scored sentences with a strictly positive ratio; the detail mean averages
// the sentences where detail_vs_vagueness is defined, 0 when none is.
struct TextScores {
  Rational vagueness_rate;
  Rational subjectivity_rate;
  Rational factual_rate;
  double mean_detail_vs_vagueness = 0.0;
  std::size_t sentence_count = 0;
  std::size_t scored_sentence_count = 0;

  friend bool operator==(const TextScores&, const TextScores&) = default;
};

// One element per sentence; nullopt marks an unscored sentence.
TextScores score_text(std::span<const std::optional<SentenceScores>> sentences);

}  // namespace vaguescore

#endif  // VAGUESCORE_SCORING_H_
