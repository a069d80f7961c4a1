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

#include "vaguescore/synthetic.h"

#include <gtest/gtest.h>

#include "vaguescore/analyzer.h"
#include "vaguescore/corpus.h"

namespace vaguescore {
namespace {

const Analyzer& analyzer() {
  static const Analyzer a = make_bundled_analyzer("en");
  return a;
}

SyntheticVocabulary vocabulary() {
  return SyntheticVocabulary::build(analyzer().lexicon(), analyzer().rules());
}

TEST(SyntheticTest, VocabularyIsDisjointFromTheLexicon) {
  const auto v = vocabulary();
  EXPECT_FALSE(v.vague.empty());
  EXPECT_FALSE(v.degree.empty());
  EXPECT_FALSE(v.multiword.empty());
  EXPECT_FALSE(v.comparative_forms.empty());
  for (const auto& w : v.neutral) EXPECT_EQ(analyzer().lexicon().find(w), nullptr) << w;
  for (const auto& e : v.vague) EXPECT_EQ(e.term.find(' '), std::string::npos);
}

TEST(SyntheticTest, AnalyzerRecoversPlantedCounts) {
  SyntheticConfig config;
  config.documents = 60;
  const auto docs = generate_corpus(vocabulary(), config);
  ASSERT_EQ(docs.size(), 60u);
  for (const auto& doc : docs) {
    const auto report = analyzer().analyze(doc.document.id, doc.document.text);
    ASSERT_EQ(report.sentences.size(), doc.plan.size()) << doc.document.id;
    std::size_t vague_sentences = 0;
    for (std::size_t i = 0; i < doc.plan.size(); ++i) {
      const auto& s = report.sentences[i];
      const auto& plan = doc.plan[i];
      EXPECT_EQ(s.sentence.word_count, plan.words);
      EXPECT_EQ(s.vague_count(), plan.vague) << s.sentence.text;
      EXPECT_EQ(s.counts[2] + s.counts[3], plan.subjective) << s.sentence.text;
      EXPECT_EQ(s.entity_count, plan.entities) << s.sentence.text;
      vague_sentences += plan.vague > 0;
    }
    EXPECT_EQ(report.text.vagueness_rate,
              Rational(static_cast<std::int64_t>(vague_sentences),
                       static_cast<std::int64_t>(doc.plan.size())));
  }
}

TEST(SyntheticTest, GenerationIsSeeded) {
  SyntheticConfig config;
  config.documents = 6;
  const auto a = corpus_to_jsonl(corpus_documents(generate_corpus(vocabulary(), config)));
  EXPECT_EQ(a, corpus_to_jsonl(corpus_documents(generate_corpus(vocabulary(), config))));
  config.seed = 43;
  EXPECT_NE(a, corpus_to_jsonl(corpus_documents(generate_corpus(vocabulary(), config))));
}

// Invariants every scored sentence must satisfy, over mixed random input.
TEST(SyntheticTest, ScoreInvariantsOnMixedSentences) {
  const auto v = vocabulary();
  Random rng(2024);
  const Rational zero, one(1, 1);
  for (int i = 0; i < 1000; ++i) {
    const auto text = random_mixed_sentence(rng, v);
    const auto report = analyzer().analyze("m", text);
    ASSERT_EQ(report.sentences.size(), 1u) << text;
    const auto& s = report.sentences[0];
    const auto& score = report.scores[0];
    ASSERT_TRUE(score.has_value()) << text;
    EXPECT_GE(score->vagueness, zero);
    EXPECT_LE(score->vagueness, one);
    EXPECT_LE(score->subjectivity, score->vagueness);
    EXPECT_EQ(score->subjectivity + score->factual_vagueness, score->vagueness);
    EXPECT_EQ(score->detail_vs_vagueness.has_value(),
              s.entity_count + s.vague_count() > 0);
    EXPECT_EQ(score->vague, score->vagueness.is_positive());
    std::size_t live = 0;
    for (const auto& m : s.matches) live += !m.cancelled;
    EXPECT_EQ(live, s.vague_count()) << text;
  }
}

}  // namespace
}  // namespace vaguescore
