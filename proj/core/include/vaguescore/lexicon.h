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

#ifndef VAGUESCORE_LEXICON_H_
#define VAGUESCORE_LEXICON_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vaguescore {

// The four-way typology of lexical vagueness. Degree and combinatorial terms
// are subjective; approximation and generality terms are factual.
enum class VaguenessCategory : std::uint8_t {
  kApproximation = 0,  // V_A: "approximately", "almost"
  kGenerality = 1,     // V_G: "some", "at most"
  kDegree = 2,         // V_D: one-dimensional gradable, "tall", "old"
  kCombinatorial = 3,  // V_C: multidimensional gradable, "good", "beautiful"
};

inline constexpr std::array<VaguenessCategory, 4> kAllCategories = {
    VaguenessCategory::kApproximation, VaguenessCategory::kGenerality,
    VaguenessCategory::kDegree, VaguenessCategory::kCombinatorial};

inline constexpr bool is_subjective(VaguenessCategory c) {
  return c == VaguenessCategory::kDegree ||
         c == VaguenessCategory::kCombinatorial;
}

// File spelling: "V_A", "V_G", "V_D", "V_C".
std::string_view category_label(VaguenessCategory c);
std::optional<VaguenessCategory> parse_category(std::string_view label);

// Per-category tallies indexed by the enum value.
using CategoryCounts = std::array<std::size_t, 4>;

inline std::size_t& count_of(CategoryCounts& counts, VaguenessCategory c) {
  return counts[static_cast<std::size_t>(c)];
}
inline std::size_t count_of(const CategoryCounts& counts, VaguenessCategory c) {
  return counts[static_cast<std::size_t>(c)];
}

struct LexiconEntry {
  std::string term;  // lowercase, single-spaced
  VaguenessCategory category = VaguenessCategory::kApproximation;
  std::string language;  // ISO 639-1

  friend auto operator<=>(const LexiconEntry&, const LexiconEntry&) = default;
};

struct LexiconMatch {
  const LexiconEntry* entry = nullptr;
  std::size_t length = 0;  // in words
};

// Immutable set of vague terms for one language. Each term carries exactly
// one category. Safe to share across threads once built.
class Lexicon {
 public:
  explicit Lexicon(std::string language = "en");

  // Validates and normalizes `entries`; identical duplicates collapse, a term
  // listed under two categories throws LexiconError.
  static Lexicon from_entries(std::string language,
                              std::vector<LexiconEntry> entries);

  const std::string& language() const { return language_; }
  std::span<const LexiconEntry> entries() const { return entries_; }
  const CategoryCounts& category_counts() const { return counts_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Longest word count of any entry.
  std::size_t max_term_words() const { return max_words_; }

  // Exact lookup of an already lowercased, single-spaced term.
  const LexiconEntry* find(std::string_view term) const;

  // Longest entry whose words match `words[start..]` case-insensitively.
  // Returns nothing when no entry starts at `start` or `start` is out of
  // range; the span never runs past the end of `words`.
  std::optional<LexiconMatch> lookup_longest(
      std::span<const std::string> words, std::size_t start) const;

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.language_ == b.language_ && a.entries_ == b.entries_;
  }

 private:
  std::string language_;
  std::vector<LexiconEntry> entries_;  // sorted by term
  std::unordered_map<std::string, std::size_t> index_;
  CategoryCounts counts_{};
  std::size_t max_words_ = 0;
};

// Reads `term<TAB>category[<TAB>score]` lines. Blank lines and lines starting
// with '#' are skipped. The optional third column is the decimal score of
// enrichment-candidate files and is ignored.
Lexicon parse_lexicon(std::istream& in, std::string language,
                      const std::string& source_name = "<lexicon>");
Lexicon load_lexicon(const std::filesystem::path& path, std::string language);

// Union of both entry sets. Throws LexiconError on a language mismatch or a
// term that the two lexicons file under different categories.
Lexicon merge_lexicons(const Lexicon& base, const Lexicon& addition);

std::string to_tsv(const Lexicon& lexicon);
void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);

bool is_language_code(std::string_view code);

}  // namespace vaguescore

#endif  // VAGUESCORE_LEXICON_H_
