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

#ifndef VAGUESCORE_SEGMENTER_H_
#define VAGUESCORE_SEGMENTER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vaguescore {

enum class TokenKind : std::uint8_t { kWord, kNumber, kPunctuation };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;
  // Byte offsets into the owning sentence text, half-open.
  std::size_t char_start = 0;
  std::size_t char_end = 0;

  bool is_wordlike() const { return kind != TokenKind::kPunctuation; }

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::string text;
  std::vector<Token> tokens;
  std::size_t index = 0;       // position in the document
  std::size_t word_count = 0;  // word and number tokens; punctuation excluded
};

// Tokenization rules:
//  - whitespace separates tokens and is never part of one;
//  - a word is a run of letters and digits; internal hyphens, decimal
//    separators between digits, dotted acronyms ("U.S.") and internal
//    apostrophes stay inside the word;
//  - French elisions ("l'", "qu'") end their own token;
//  - a trailing '%' stays with a number;
//  - every other character is punctuation, with runs of the same character
//    ("...", "!!!") grouped into one token.
// A word whose surface matches digits with optional separators and an
// optional trailing percent sign is a number.
std::vector<Token> tokenize(std::string_view text);

bool is_numeric(std::string_view surface);

// Builds a sentence from already segmented text.
Sentence make_sentence(std::string text, std::size_t index);

// Rule-based splitting on . ! ? and the ellipsis, guarded by a per-language
// abbreviation list. A period followed by a lowercase word does not end a
// sentence, and a blank line always does. Text without any terminator comes
// back as a single sentence; empty or whitespace-only text gives none.
std::vector<Sentence> split_sentences(std::string_view text,
                                      std::string_view language = "en");

}  // namespace vaguescore

#endif  // VAGUESCORE_SEGMENTER_H_
