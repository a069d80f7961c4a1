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

#ifndef VAGUESCORE_SYNTHETIC_H_
#define VAGUESCORE_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vaguescore/corpus.h"
#include "vaguescore/lexicon.h"
#include "vaguescore/matcher.h"
#include "vaguescore/random.h"

namespace vaguescore {

// Word pools for generated English text. `build` keeps only single-word
// lexicon terms that take part in no multiword entry, so two adjacent
// planted terms can never fuse into one match, and checks that the neutral
// filler shares nothing with the lexicon or the cancellation triggers.
struct SyntheticVocabulary {
  std::vector<std::string> neutral;
  std::vector<std::string> names;  // capitalized, never lexicon terms
  std::vector<LexiconEntry> vague;
  std::vector<LexiconEntry> multiword;
  std::vector<LexiconEntry> degree;           // V_D subset of `vague`
  std::vector<std::string> comparative_forms; // table rows with V_D bases
  std::vector<std::string> units;
  std::vector<std::string> degree_markers;
  std::vector<std::string> standard_markers;

  static SyntheticVocabulary build(const Lexicon& lexicon,
                                   const CancellationRules& rules);
};

struct SyntheticConfig {
  std::size_t documents = 600;
  std::size_t sentences_per_document = 20;
  std::size_t min_words = 10;
  std::size_t max_words = 14;
  std::string regular_label = "regular";
  std::string satirical_label = "satirical";
  double regular_vague_density = 0.03;
  double satirical_vague_density = 0.09;
  double entity_density = 0.08;
  std::uint64_t seed = kDefaultSeed;
};

// What the generator planted in one sentence. With the bundled rules none of
// it can be cancelled or merged, so these are the counts a correct analysis
// must report.
struct SentencePlan {
  std::size_t words = 0;
  std::size_t vague = 0;
  std::size_t subjective = 0;
  std::size_t entities = 0;
};

struct SyntheticDocument {
  CorpusDocument document;
  std::vector<SentencePlan> plan;
};

// Documents alternate between the two labels, ids "syn-0000", "syn-0001", ...
// Every word position draws a vague term with the label's density, otherwise
// an entity with `entity_density` (never next to another entity and never in
// the first two positions), otherwise a neutral word. The first word is a
// capitalized neutral word.
std::vector<SyntheticDocument> generate_corpus(const SyntheticVocabulary& vocab,
                                               const SyntheticConfig& config);

std::vector<CorpusDocument> corpus_documents(
    const std::vector<SyntheticDocument>& docs);

// A sentence mixing everything the matcher reacts to: multiword terms,
// comparatives with and without a standard, measure phrases, superlative-like
// forms, entities and punctuation. Outcomes are left to the analyzer.
std::string random_mixed_sentence(Random& rng,
                                  const SyntheticVocabulary& vocab);

}  // namespace vaguescore

#endif  // VAGUESCORE_SYNTHETIC_H_
