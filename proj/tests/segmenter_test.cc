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

#include "vaguescore/segmenter.h"

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "vaguescore/random.h"
#include "vaguescore/text.h"

namespace vaguescore {
namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

std::size_t word_tokens(std::string_view s) {
  std::size_t n = 0;
  for (const auto& t : tokenize(s)) n += t.is_wordlike();
  return n;
}

// Surfaces sit at their offsets and everything between them is whitespace.
void expect_reconstructs(const std::string& text,
                         const std::vector<Token>& tokens) {
  std::size_t cursor = 0;
  for (const auto& t : tokens) {
    ASSERT_LE(cursor, t.char_start);
    ASSERT_LE(t.char_end, text.size());
    EXPECT_EQ(text.substr(t.char_start, t.char_end - t.char_start), t.surface);
    for (std::size_t k = cursor; k < t.char_start; ++k) {
      EXPECT_TRUE(text[k] == ' ' || text[k] == '\t' || text[k] == '\n' ||
                  text[k] == '\r' || static_cast<unsigned char>(text[k]) >= 0x80)
          << "non-space gap in: " << text;
    }
    cursor = t.char_end;
  }
}

TEST(SegmenterTest, CovidSentenceHasElevenWords) {
  const auto tokens = tokenize(
      "To quickly cure Covid-19, one must take an excellent herbal "
      "decoction.");
  EXPECT_EQ(word_tokens(
                "To quickly cure Covid-19, one must take an excellent herbal "
                "decoction."),
            11u);
  EXPECT_EQ(tokens[3].surface, "Covid-19");
  EXPECT_EQ(tokens[3].kind, TokenKind::kWord);
}

TEST(SegmenterTest, GovernmentSentenceHasSevenWords) {
  EXPECT_EQ(word_tokens("Government is almost always wasteful and inefficient."),
            7u);
}

TEST(SegmenterTest, EllipsisIsOnePunctuationToken) {
  const auto tokens = tokenize("\xE2\x80\xA6");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].kind, TokenKind::kPunctuation);
  EXPECT_EQ(make_sentence("\xE2\x80\xA6", 0).word_count, 0u);
  EXPECT_EQ(surfaces(tokenize("Wait...!!!")),
            (std::vector<std::string>{"Wait", "...", "!!!"}));
}

TEST(SegmenterTest, NumbersAcronymsAndPercent) {
  const auto tokens = tokenize("In the U.S. 3.5% of 1,200 people paid $15.");
  EXPECT_EQ(surfaces(tokens),
            (std::vector<std::string>{"In", "the", "U.S.", "3.5%", "of",
                                      "1,200", "people", "paid", "$", "15",
                                      "."}));
  EXPECT_EQ(tokens[2].kind, TokenKind::kWord);
  EXPECT_EQ(tokens[3].kind, TokenKind::kNumber);
  EXPECT_EQ(tokens[5].kind, TokenKind::kNumber);
  EXPECT_EQ(tokens[9].kind, TokenKind::kNumber);
  EXPECT_TRUE(is_numeric("2017"));
  EXPECT_FALSE(is_numeric("Covid-19"));
}

TEST(SegmenterTest, ApostrophesAndElision) {
  EXPECT_EQ(surfaces(tokenize("l'homme qu'il don't")),
            (std::vector<std::string>{"l'", "homme", "qu'", "il", "don't"}));
  EXPECT_EQ(surfaces(tokenize("aujourd\xE2\x80\x99hui l\xE2\x80\x99" "effet")),
            (std::vector<std::string>{"aujourd\xE2\x80\x99hui",
                                      "l\xE2\x80\x99", "effet"}));
}

TEST(SegmenterTest, SplitExamples) {
  EXPECT_EQ(split_sentences("A big dog. A cat!").size(), 2u);
  EXPECT_EQ(split_sentences("Mr. Smith left.").size(), 1u);
  EXPECT_TRUE(split_sentences("").empty());
  EXPECT_TRUE(split_sentences("   \n ").empty());
}

TEST(SegmenterTest, SplitGuards) {
  EXPECT_EQ(split_sentences("He lives in the U.S. He works.").size(), 1u)
      << "acronyms never end a sentence";
  EXPECT_EQ(split_sentences("It cost 3.5 dollars. Then it rose.").size(), 2u);
  EXPECT_EQ(split_sentences("J. Smith wrote it.").size(), 1u);
  EXPECT_EQ(split_sentences("Really?! Yes.").size(), 2u);
  EXPECT_EQ(split_sentences("See e.g. the list. Done.").size(), 2u);
  EXPECT_EQ(split_sentences("first part. second part").size(), 1u);
  EXPECT_EQ(split_sentences("M. Dupont est venu. Il est parti.", "fr").size(),
            2u);
}

TEST(SegmenterTest, BlankLineAndUnterminatedText) {
  EXPECT_EQ(split_sentences("Heading\n\nBody text here").size(), 2u);
  const auto one = split_sentences("no terminator at all");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].word_count, 4u);
}

TEST(SegmenterTest, ClosingQuotesStayWithTheSentence) {
  const auto s = split_sentences("He said \"stop.\" Then he left.");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].text, "He said \"stop.\"");
  EXPECT_EQ(s[1].text, "Then he left.");
}

TEST(SegmenterTest, IndicesAreDenseAndOffsetsLocal) {
  const std::string doc =
      "First one here. Second, with Covid-19! Third... and so on? Last";
  const auto sentences = split_sentences(doc);
  ASSERT_EQ(sentences.size(), 4u);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    EXPECT_EQ(sentences[i].index, i);
    expect_reconstructs(sentences[i].text, sentences[i].tokens);
    EXPECT_LE(sentences[i].word_count, sentences[i].tokens.size());
  }
}

TEST(SegmenterTest, RandomTextProperties) {
  const char* pieces[] = {"word", "Name", "U.S.", "3.5%", "l'", "co-op",
                          ",",    ".",    "!",    "?",    " ",  "  ",
                          "\n",   "é",    "\xE2\x80\xA6", "\"", "(", ")"};
  Random rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const auto n = rng.below(30);
    for (std::size_t k = 0; k < n; ++k) {
      text += pieces[rng.below(std::size(pieces))];
      if (rng.bernoulli(0.5)) text += ' ';
    }
    const auto tokens = tokenize(text);
    expect_reconstructs(text, tokens);
    EXPECT_EQ(tokenize(text), tokens) << "tokenize is deterministic";
    for (const auto& t : tokens) {
      EXPECT_EQ(t.kind == TokenKind::kNumber, is_numeric(t.surface));
    }
    const auto sentences = split_sentences(text);
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      EXPECT_EQ(sentences[i].index, i);
      expect_reconstructs(sentences[i].text, sentences[i].tokens);
      EXPECT_EQ(sentences[i].word_count == 0,
                std::none_of(sentences[i].tokens.begin(),
                             sentences[i].tokens.end(),
                             [](const Token& t) { return t.is_wordlike(); }));
    }
  }
}

}  // namespace
}  // namespace vaguescore
