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

#include "vaguescore/entities.h"

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.h"
#include "vaguescore/error.h"
#include "vaguescore/io.h"
#include "vaguescore/random.h"
#include "vaguescore/synthetic.h"

namespace vaguescore {
namespace {

constexpr char kSentenceA[] =
    "King of Naples from 1806 to 1808, then of Spain from 1808 to 1813, he "
    "is an important figure in the plan implemented by Napoleon to establish "
    "the sovereignty of France over continental Europe.";
constexpr char kSentenceB[] =
    "To quickly cure Covid-19, one must take an excellent herbal decoction.";

std::vector<std::string> span_text(const Sentence& s,
                                   const std::vector<EntitySpan>& spans) {
  std::vector<std::string> out;
  for (const auto& e : spans) {
    std::string t;
    for (std::size_t k = e.token_start; k < e.token_start + e.token_len; ++k) {
      if (!t.empty()) t += ' ';
      t += s.tokens[k].surface;
    }
    out.push_back(t);
  }
  return out;
}

EntityAnnotations parse(const std::string& content) {
  std::istringstream in(content);
  return parse_annotations(in, "ann.jsonl");
}

TEST(EntitiesTest, SentenceAHasNineSpans) {
  const auto s = make_sentence(kSentenceA, 0);
  const auto spans = detect_entities(s);
  EXPECT_EQ(spans.size(), 9u);
  EXPECT_EQ(span_text(s, spans),
            (std::vector<std::string>{"Naples", "1806", "1808", "Spain",
                                      "1808", "1813", "Napoleon", "France",
                                      "Europe"}));
  EXPECT_EQ(spans[1].kind, EntityKind::kDate);
}

TEST(EntitiesTest, SentenceBHasOneSpan) {
  const auto s = make_sentence(kSentenceB, 0);
  const auto spans = detect_entities(s);
  EXPECT_EQ(span_text(s, spans), (std::vector<std::string>{"Covid-19"}));
}

TEST(EntitiesTest, LowercaseTextHasNoSpan) {
  EXPECT_TRUE(detect_entities(make_sentence("a cat sat", 0)).empty());
}

TEST(EntitiesTest, ConnectorsJoinOnlyBetweenNames) {
  const auto s = make_sentence("We met the Duke of Edinburgh of course.", 0);
  EXPECT_EQ(span_text(s, detect_entities(s)),
            (std::vector<std::string>{"Duke of Edinburgh"}));
  const auto fr = make_sentence("Il visite la Banque de France.", 0);
  EXPECT_EQ(span_text(fr, detect_entities(fr)),
            (std::vector<std::string>{"Banque de France"}));
}

TEST(EntitiesTest, NumbersAndYears) {
  const auto s = make_sentence("In 1999 about 42 people and 3.5% left.", 0);
  const auto spans = detect_entities(s);
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(spans[0].kind, EntityKind::kDate);
  EXPECT_EQ(spans[1].kind, EntityKind::kNumber);
  EXPECT_EQ(spans[2].kind, EntityKind::kNumber);
}

TEST(EntitiesTest, SentenceInitialWordNeedsMidSentenceEvidence) {
  const auto sentences =
      split_sentences("Paris is large. Some like Paris. Tables are wood.");
  const CapitalizationContext context(sentences);
  EXPECT_TRUE(context.seen_mid_sentence("Paris"));
  EXPECT_EQ(detect_entities(sentences[0], &context).size(), 1u);
  EXPECT_TRUE(detect_entities(sentences[0]).empty());
  EXPECT_TRUE(detect_entities(sentences[2], &context).empty());
  const auto pronoun = make_sentence("Then I saw it.", 0);
  EXPECT_TRUE(detect_entities(pronoun).empty());
}

TEST(EntitiesTest, HeuristicSpansAreValidOnRandomText) {
  const auto lexicon = load_lexicon(seed_lexicon_path("en"), "en");
  const auto vocab =
      SyntheticVocabulary::build(lexicon, bundled_cancellation_rules("en"));
  Random rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto s = make_sentence(random_mixed_sentence(rng, vocab), 0);
    const auto spans = detect_entities(s);
    EXPECT_NO_THROW(validate_spans(spans, s));
  }
}

TEST(EntitiesTest, ValidateRejectsBadSpans) {
  const auto s = make_sentence("One two three", 0);
  EXPECT_THROW(validate_spans(std::vector<EntitySpan>{{0, 0}}, s), Error);
  EXPECT_THROW(validate_spans(std::vector<EntitySpan>{{2, 2}}, s), Error);
  EXPECT_THROW(validate_spans(std::vector<EntitySpan>{{0, 2}, {1, 1}}, s),
               Error);
  EXPECT_NO_THROW(validate_spans(std::vector<EntitySpan>{{0, 1}, {2, 1}}, s));
}

TEST(EntitiesTest, IngestSingleRecord) {
  const auto map = parse(
      R"({"doc_id": "d1", "sent_index": 0, "entities": [{"start": 3, "len": 1, "kind": "date"}]})"
      "\n");
  ASSERT_EQ(map.size(), 1u);
  const auto& spans = map.at({"d1", 0});
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].token_start, 3u);
  EXPECT_EQ(spans[0].kind, EntityKind::kDate);
}

TEST(EntitiesTest, IngestEmptyAndErrors) {
  EXPECT_TRUE(parse("").empty());
  const std::string rec =
      R"({"doc_id": "d1", "sent_index": 0, "entities": []})";
  try {
    parse(rec + "\n" + rec + "\n");
    FAIL() << "duplicate accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse(rec + "\n\n{not json\n");
    FAIL() << "malformed line accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(
      parse(R"({"doc_id": "d", "sent_index": 0, "entities": [{"start": 0, "len": 0}]})"),
      ParseError);
  EXPECT_THROW(
      parse(R"({"doc_id": "d", "sent_index": 0, "entities": [{"start": 0, "len": 1, "kind": "planet"}]})"),
      ParseError);
}

TEST(EntitiesTest, AnnotationsReplaceHeuristicsEntirely) {
  const auto analyzer = testing::make_analyzer(
      testing::make_lexicon({{"important", testing::kC}}));
  EntityAnnotations annotations;
  annotations[{"doc", 0}] = {{0, 3, EntityKind::kName}};
  const auto plain = analyzer.analyze("doc", kSentenceA);
  const auto annotated = analyzer.analyze("doc", kSentenceA, &annotations);
  EXPECT_EQ(plain.sentences[0].entity_count, 9u);
  ASSERT_EQ(annotated.sentences[0].entities.size(), 1u);
  EXPECT_EQ(annotated.sentences[0].entities[0].token_len, 3u);

  annotations[{"doc", 0}] = {{30, 30, EntityKind::kName}};
  EXPECT_THROW(analyzer.analyze("doc", kSentenceA, &annotations), Error);
}

}  // namespace
}  // namespace vaguescore
