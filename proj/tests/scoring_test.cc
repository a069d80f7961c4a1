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

#include <optional>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.h"
#include "vaguescore/analyzer.h"
#include "vaguescore/io.h"
#include "vaguescore/random.h"
#include "vaguescore/synthetic.h"

namespace vaguescore {
namespace {

using testing::kC;
using testing::kD;
using testing::kG;

AnalyzedSentence analyzed(std::size_t words, CategoryCounts counts,
                          std::size_t entities) {
  std::string text;
  for (std::size_t i = 0; i < words; ++i) text += "w ";
  AnalyzedSentence a;
  a.sentence = make_sentence(text, 0);
  a.counts = counts;
  a.entity_count = entities;
  return a;
}

TEST(ScoringTest, SentenceBDetailRatio) {
  const auto analyzer = make_bundled_analyzer("en");
  const auto report = analyzer.analyze(
      "b",
      "To quickly cure Covid-19, one must take an excellent herbal decoction.");
  ASSERT_TRUE(report.scores[0]);
  EXPECT_EQ(report.scores[0]->detail_vs_vagueness, Rational(1, 3));
  EXPECT_EQ(report.scores[0]->vagueness, Rational(2, 11));
}

TEST(ScoringTest, PrcSentenceFourIsDetailedOpinion) {
  const auto analyzer = make_bundled_analyzer("en");
  const auto report = analyzer.analyze(
      "prc-04",
      "Spending on Social Security, Medicare, and Medicaid make up the "
      "largest portion of the U.S. federal budget.");
  const auto& s = *report.scores[0];
  EXPECT_EQ(s.detail_vs_vagueness, Rational(4, 5));
  EXPECT_TRUE(s.opinion);
  EXPECT_TRUE(s.subjectivity.is_positive());
}

TEST(ScoringTest, GeneralityAloneIsVagueFact) {
  const auto analyzer = make_bundled_analyzer("en");
  const auto report = analyzer.analyze(
      "prc-02",
      "Immigrants who are in the U.S. illegally have some rights under the "
      "Constitution.");
  const auto& s = *report.scores[0];
  EXPECT_TRUE(s.vague);
  EXPECT_FALSE(s.opinion);
  EXPECT_TRUE(s.subjectivity.is_zero());
}

TEST(ScoringTest, NothingToCount) {
  const auto s = score_sentence(analyzed(4, {}, 0));
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->vagueness.is_zero());
  EXPECT_TRUE(s->detail.is_zero());
  EXPECT_FALSE(s->detail_vs_vagueness);
  EXPECT_FALSE(s->vague);
  EXPECT_FALSE(s->opinion);
}

TEST(ScoringTest, EmptySentenceIsUnscored) {
  AnalyzedSentence a;
  a.sentence = make_sentence("!!!", 0);
  EXPECT_FALSE(score_sentence(a));
}

TEST(ScoringTest, MultiwordCountsOnceButEveryWordCountsInN) {
  const auto analyzer = testing::make_analyzer(
      testing::make_lexicon({{"at most", kG}}));
  const auto report = analyzer.analyze("d", "At most five came.");
  EXPECT_EQ(report.sentences[0].vague_count(), 1u);
  EXPECT_EQ(report.scores[0]->vagueness, Rational(1, 4));
}

TEST(ScoringTest, TextExamples) {
  std::vector<std::optional<SentenceScores>> two(2);
  two[0] = score_sentence(analyzed(2, {0, 1, 0, 0}, 0));  // vagueness 1/2
  two[1] = score_sentence(analyzed(2, {}, 0));
  EXPECT_EQ(score_text(two).vagueness_rate, Rational(1, 2));

  std::vector<std::optional<SentenceScores>> three(3);
  three[0] = score_sentence(analyzed(5, {0, 0, 0, 2}, 1));  // 1/3
  three[1] = score_sentence(analyzed(5, {}, 0));            // undefined
  three[2] = score_sentence(analyzed(5, {0, 0, 1, 0}, 2));  // 2/3
  EXPECT_DOUBLE_EQ(score_text(three).mean_detail_vs_vagueness, 0.5);

  const auto empty = score_text({});
  EXPECT_EQ(empty.sentence_count, 0u);
  EXPECT_EQ(empty.scored_sentence_count, 0u);
  EXPECT_TRUE(empty.vagueness_rate.is_zero());
  EXPECT_EQ(empty.mean_detail_vs_vagueness, 0.0);
}

TEST(ScoringTest, UnscoredSentencesLeaveDenominators) {
  std::vector<std::optional<SentenceScores>> s(3);
  s[0] = score_sentence(analyzed(3, {0, 0, 1, 0}, 0));
  s[2] = score_sentence(analyzed(3, {}, 0));
  const auto t = score_text(s);
  EXPECT_EQ(t.sentence_count, 3u);
  EXPECT_EQ(t.scored_sentence_count, 2u);
  EXPECT_EQ(t.vagueness_rate, Rational(1, 2));
}

TEST(ScoringTest, RatioAlgebraOnRandomCounts) {
  Random rng(21);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng.below(20);
    CategoryCounts c{};
    std::size_t budget = n;
    for (auto& x : c) {
      x = rng.below(budget + 1) / 2;
      budget -= x;
    }
    const std::size_t p = rng.below(budget + 1);
    const auto s = score_sentence(analyzed(n, c, p));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->vagueness, s->subjectivity + s->factual_vagueness);
    EXPECT_EQ(s->vague, s->vagueness.is_positive());
    EXPECT_EQ(s->opinion, s->subjectivity.is_positive());
    const std::size_t v = c[0] + c[1] + c[2] + c[3];
    EXPECT_EQ(s->detail_vs_vagueness.has_value(), p + v > 0);
    if (s->detail_vs_vagueness) {
      EXPECT_EQ(*s->detail_vs_vagueness == Rational(1, 1), v == 0 && p > 0);
      EXPECT_EQ(s->detail_vs_vagueness->is_zero(), p == 0 && v > 0);
    }
    // One more subjective match, same N.
    if (v < n) {
      auto more = c;
      ++more[3];
      EXPECT_GT(score_sentence(analyzed(n, more, p))->subjectivity,
                s->subjectivity);
    }
  }
}

TEST(ScoringTest, CancelledMatchesScoreLikeRemovedOnes) {
  const auto lexicon = load_lexicon(seed_lexicon_path("en"), "en");
  const auto rules = bundled_cancellation_rules("en");
  const auto analyzer = testing::make_analyzer(lexicon, rules);
  const auto vocab = SyntheticVocabulary::build(lexicon, rules);
  Random rng(8);
  for (int i = 0; i < 500; ++i) {
    const auto a = analyzer.analyze_sentence(
        make_sentence(random_mixed_sentence(rng, vocab), 0));
    std::vector<VagueMatch> kept;
    for (const auto& m : a.matches) {
      if (!m.cancelled) kept.push_back(m);
    }
    const auto stripped = make_analyzed_sentence(a.sentence, kept, a.entities);
    EXPECT_EQ(score_sentence(a), score_sentence(stripped));
  }
}

}  // namespace
}  // namespace vaguescore
