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

#ifndef VAGUESCORE_MATCHER_H_
#define VAGUESCORE_MATCHER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vaguescore/lexicon.h"
#include "vaguescore/segmenter.h"

namespace vaguescore {

enum class CancelReason : std::uint8_t { kComparative, kMeasurePhrase };

std::string_view cancel_reason_label(CancelReason reason);
std::optional<CancelReason> parse_cancel_reason(std::string_view label);

struct VagueMatch {
  LexiconEntry entry;
  std::size_t token_start = 0;
  std::size_t token_len = 0;
  std::string surface;  // matched tokens joined by single spaces
  bool cancelled = false;
  std::optional<CancelReason> cancel_reason;  // set iff cancelled

  friend bool operator==(const VagueMatch&, const VagueMatch&) = default;
};

// One row of the comparative table: an inflected surface form mapped to its
// lexicon base. Rows marked comparative carry comparative morphology
// ("taller" -> "tall"); plain inflection rows only widen matching
// ("grande" -> "grand").
struct InflectedForm {
  std::string base;
  bool comparative = true;
};

// Per-language trigger inventory for vagueness cancellation.
struct CancellationRules {
  std::string language = "en";
  std::unordered_map<std::string, InflectedForm> inflections;
  std::unordered_set<std::string> units;
  std::unordered_set<std::string> degree_markers;    // "more", "less"
  std::unordered_set<std::string> standard_markers;  // "than"
  // Words that, two tokens before a match, mark an analytic superlative
  // ("le plus grand"). Superlatives are never cancelled.
  std::unordered_set<std::string> superlative_articles;

  // Built-in marker words for `language` with empty tables.
  static CancellationRules defaults_for(std::string_view language);
};

// Comparative table: `inflected<TAB>base[<TAB>comparative|inflection]`,
// '#' comments. The third column defaults to comparative.
void parse_comparatives(std::istream& in, CancellationRules& rules,
                        const std::string& source_name = "<comparatives>");
// Unit table: one unit word per line, '#' comments.
void parse_units(std::istream& in, CancellationRules& rules);

CancellationRules load_cancellation_rules(
    std::string_view language, const std::filesystem::path& comparatives,
    const std::filesystem::path& units);

// Rules for `language` from the bundled data directory; tables that are not
// shipped for the language are left empty.
CancellationRules bundled_cancellation_rules(std::string_view language);

// Greedy left-to-right longest-match scan over runs of word and number
// tokens; a match never crosses punctuation. A single token that is listed
// in the inflection table and whose base is a degree (V_D) entry matches that
// entry. All returned matches are uncancelled.
std::vector<VagueMatch> find_vague_terms(const Sentence& sentence,
                                         const Lexicon& lexicon,
                                         const CancellationRules& rules);
std::vector<VagueMatch> find_vague_terms(const Sentence& sentence,
                                         const Lexicon& lexicon);

// Flags degree matches neutralized by their context:
//  - comparative: the previous token is a degree marker, or the match is a
//    comparative form, and a standard marker ("than") follows later on;
//  - measure phrase: the two previous tokens are a number and a unit.
// Superlatives and non-degree matches are never cancelled. Only the
// `cancelled` flag and reason change.
std::vector<VagueMatch> apply_cancellation(std::vector<VagueMatch> matches,
                                           const Sentence& sentence,
                                           const CancellationRules& rules);

}  // namespace vaguescore

#endif  // VAGUESCORE_MATCHER_H_
