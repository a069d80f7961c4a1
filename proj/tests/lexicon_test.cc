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

#include "vaguescore/lexicon.h"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.h"
#include "vaguescore/error.h"
#include "vaguescore/io.h"
#include "vaguescore/random.h"

namespace vaguescore {
namespace {

using testing::kA;
using testing::kC;
using testing::kD;
using testing::kG;
using testing::make_lexicon;

Lexicon parse(const std::string& content, const std::string& lang = "en") {
  std::istringstream in(content);
  return parse_lexicon(in, lang, "test.tsv");
}

std::size_t error_line(const std::string& content) {
  try {
    parse(content);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(LexiconTest, LoadsTwoEntries) {
  const auto lex = parse("excellent\tV_C\nsome\tV_G\n");
  EXPECT_EQ(lex.size(), 2u);
  EXPECT_EQ(count_of(lex.category_counts(), kC), 1u);
  EXPECT_EQ(count_of(lex.category_counts(), kG), 1u);
  EXPECT_EQ(count_of(lex.category_counts(), kA), 0u);
}

TEST(LexiconTest, EmptyFileGivesEmptyLexicon) {
  const auto lex = parse("");
  EXPECT_TRUE(lex.empty());
  for (const auto c : kAllCategories) {
    EXPECT_EQ(count_of(lex.category_counts(), c), 0u);
  }
}

TEST(LexiconTest, CommentsBlankLinesBomAndCarriageReturns) {
  const auto lex =
      parse("\xEF\xBB\xBF# header\n\nAlmost\tV_A\r\n  # indented comment\n");
  ASSERT_EQ(lex.size(), 1u);
  EXPECT_EQ(lex.entries()[0].term, "almost");
}

TEST(LexiconTest, IdenticalDuplicatesCollapse) {
  EXPECT_EQ(parse("big\tV_D\nBig\tV_D\n").size(), 1u);
}

TEST(LexiconTest, ScoreColumnIsAccepted) {
  const auto lex = parse("durable\tV_C\t0.731\nclean\tV_C\t1e-3\n");
  EXPECT_EQ(lex.size(), 2u);
}

TEST(LexiconTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("some\tV_G\nbig\tV_X\n"), 2u);
  EXPECT_EQ(error_line("# c\n\tV_C\n"), 2u);
  EXPECT_EQ(error_line("big\tV_D\nsmall\tV_D\nbig\tV_C\n"), 3u);
  EXPECT_EQ(error_line("big\n"), 1u);
  EXPECT_EQ(error_line("big\tV_D\tlots\n"), 1u);
  EXPECT_EQ(error_line("big\tV_D\t0.5\textra\n"), 1u);
}

TEST(LexiconTest, MultiwordTermsAreSpaceNormalized) {
  const auto lex = parse("at   most\tV_G\n");
  ASSERT_EQ(lex.size(), 1u);
  EXPECT_EQ(lex.entries()[0].term, "at most");
  EXPECT_EQ(lex.max_term_words(), 2u);
}

TEST(LexiconTest, ReferenceSizedLexiconCounts) {
  std::string content;
  const std::pair<const char*, int> sizes[] = {
      {"V_A", 9}, {"V_G", 18}, {"V_D", 43}, {"V_C", 1570}};
  for (const auto& [label, n] : sizes) {
    for (int i = 0; i < n; ++i) {
      content += std::string(label) + "term" + std::to_string(i) + "\t" +
                 label + "\n";
    }
  }
  const auto lex = parse(content);
  EXPECT_EQ(count_of(lex.category_counts(), kA), 9u);
  EXPECT_EQ(count_of(lex.category_counts(), kG), 18u);
  EXPECT_EQ(count_of(lex.category_counts(), kD), 43u);
  EXPECT_EQ(count_of(lex.category_counts(), kC), 1570u);
  EXPECT_EQ(lex.size(), 1640u);
}

TEST(LexiconTest, RejectsBadLanguageCode) {
  EXPECT_THROW(Lexicon("english"), Error);
  EXPECT_TRUE(is_language_code("fr"));
  EXPECT_FALSE(is_language_code("FR"));
}

TEST(LexiconTest, MergeExamples) {
  const auto big_d = make_lexicon({{"big", kD}});
  EXPECT_EQ(merge_lexicons(big_d, make_lexicon({{"durable", kC}})).size(), 2u);
  EXPECT_EQ(merge_lexicons(big_d, big_d).size(), 1u);
  try {
    merge_lexicons(big_d, make_lexicon({{"big", kC}}));
    FAIL() << "conflict not reported";
  } catch (const LexiconError& e) {
    EXPECT_NE(std::string(e.what()).find("big"), std::string::npos);
  }
  EXPECT_THROW(merge_lexicons(big_d, make_lexicon({{"grand", kD}}, "fr")),
               LexiconError);
}

TEST(LexiconTest, MergeIsAssociativeAndCommutative) {
  const char* pool[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"};
  Random rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    // One fixed category per term keeps the inputs conflict-free.
    auto random_lexicon = [&] {
      std::vector<LexiconEntry> entries;
      for (int k = 0; k < 10; ++k) {
        if (rng.bernoulli(0.4)) {
          entries.push_back({pool[k], kAllCategories[k % 4], "en"});
        }
      }
      return Lexicon::from_entries("en", entries);
    };
    const auto x = random_lexicon();
    const auto y = random_lexicon();
    const auto z = random_lexicon();
    EXPECT_EQ(merge_lexicons(x, y), merge_lexicons(y, x));
    EXPECT_EQ(merge_lexicons(merge_lexicons(x, y), z),
              merge_lexicons(x, merge_lexicons(y, z)));
  }
}

TEST(LexiconTest, SaveLoadRoundTrip) {
  const auto path =
      std::filesystem::temp_directory_path() / "vaguescore_lexicon_rt.tsv";
  const auto lex = make_lexicon(
      {{"à peu près", kA}, {"au plus", kG}, {"grand", kD}, {"qualifié", kC}},
      "fr");
  save_lexicon(lex, path);
  EXPECT_EQ(load_lexicon(path, "fr"), lex);
  std::filesystem::remove(path);
}

TEST(LexiconTest, LookupLongest) {
  const auto lex =
      make_lexicon({{"at most", kG}, {"excellent", kC}, {"very", kD},
                    {"very big", kC}});
  const std::vector<std::string> at_most = {"at", "most", "five"};
  auto m = lex.lookup_longest(at_most, 0);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->length, 2u);
  EXPECT_EQ(m->entry->term, "at most");

  const std::vector<std::string> excellent = {"Excellent", "idea"};
  m = lex.lookup_longest(excellent, 0);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->length, 1u);

  const std::vector<std::string> very_big = {"very", "big"};
  m = lex.lookup_longest(very_big, 0);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->entry->term, "very big");
  EXPECT_EQ(m->entry->category, kC);
  EXPECT_EQ(m->length, 2u);

  EXPECT_FALSE(lex.lookup_longest(excellent, 1));
  EXPECT_FALSE(lex.lookup_longest(excellent, 9));
}

TEST(LexiconTest, LookupNeverRunsPastTheEnd) {
  const auto lex = make_lexicon({{"at most", kG}, {"at", kG}});
  const std::vector<std::string> words = {"x", "at"};
  const auto m = lex.lookup_longest(words, 1);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->length, 1u);
}

TEST(LexiconTest, BundledSeedLexiconsCoverAllCategories) {
  for (const char* lang : {"en", "fr"}) {
    const auto lex = load_lexicon(seed_lexicon_path(lang), lang);
    std::size_t total = 0;
    for (const auto c : kAllCategories) {
      EXPECT_GT(count_of(lex.category_counts(), c), 0u) << lang;
      total += count_of(lex.category_counts(), c);
    }
    EXPECT_EQ(total, lex.size());
    EXPECT_GE(lex.size(), 55u);
  }
}

TEST(LexiconTest, SeedLexiconCategoryChoices) {
  const auto en = load_lexicon(seed_lexicon_path("en"), "en");
  EXPECT_EQ(en.find("should")->category, kC);
  EXPECT_EQ(en.find("most")->category, kG);
  EXPECT_EQ(en.find("some")->category, kG);
  const auto fr = load_lexicon(seed_lexicon_path("fr"), "fr");
  EXPECT_EQ(fr.find("au plus")->category, kG);
  EXPECT_EQ(fr.find("environ")->category, kA);
}

}  // namespace
}  // namespace vaguescore
