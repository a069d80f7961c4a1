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

#include <algorithm>
#include <array>
#include <unordered_set>

#include "vaguescore/text.h"

namespace vaguescore {

namespace {

constexpr char32_t kEllipsis = 0x2026;

bool is_word_char(char32_t cp) {
  return text::is_letter(cp) || text::is_digit(cp);
}

bool is_hyphen(char32_t cp) { return cp == '-' || cp == 0x2011; }

char32_t peek(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return 0;
  return text::decode(s, pos);
}

// Code point after the one at `pos`.
char32_t peek_next(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return 0;
  text::decode(s, pos);
  return peek(s, pos);
}

const std::unordered_set<std::string>& elisions() {
  static const std::unordered_set<std::string> kElisions = {
      "l", "d", "j", "m", "n", "s", "t", "c", "qu", "jusqu", "lorsqu",
      "puisqu", "quoiqu"};
  return kElisions;
}

// End offset of the word starting at `start`.
std::size_t scan_word(std::string_view s, std::size_t start) {
  std::size_t pos = start;
  char32_t prev = 0;
  std::size_t segment_letters = 0;  // letters since the word start or last '.'
  bool acronym = false;
  bool only_digits = true;

  while (pos < s.size()) {
    std::size_t next = pos;
    const char32_t cp = text::decode(s, next);

    if (is_word_char(cp)) {
      if (!text::is_digit(cp)) only_digits = false;
      segment_letters = text::is_letter(cp) ? segment_letters + 1 : 2;
      prev = cp;
      pos = next;
      continue;
    }
    const char32_t after = peek(s, next);

    if (is_hyphen(cp) && is_word_char(after)) {
      only_digits = false;
      segment_letters = 0;
      prev = cp;
      pos = next;
      continue;
    }
    if ((cp == '.' || cp == ',') && text::is_digit(prev) &&
        text::is_digit(after)) {
      prev = cp;
      pos = next;
      continue;
    }
    if (cp == '.' && segment_letters == 1 && text::is_letter(prev)) {
      if (text::is_letter(after) && peek_next(s, next) == '.') {
        acronym = true;
        segment_letters = 0;
        prev = cp;
        pos = next;
        continue;
      }
      if (acronym) return next;  // closing period of "U.S."
    }
    if (text::is_apostrophe(cp) && text::is_letter(after)) {
      const auto prefix = text::to_lower(s.substr(start, pos - start));
      if (elisions().count(prefix) != 0) return next;
      only_digits = false;
      segment_letters = 0;
      prev = cp;
      pos = next;
      continue;
    }
    if (cp == '%' && only_digits) return next;
    break;
  }
  return pos;
}

bool is_terminal_punct(std::string_view surface) {
  std::size_t pos = 0;
  while (pos < surface.size()) {
    const char32_t cp = text::decode(surface, pos);
    if (cp != '.' && cp != '!' && cp != '?' && cp != kEllipsis) return false;
  }
  return !surface.empty();
}

bool is_closing_punct(std::string_view surface) {
  std::size_t pos = 0;
  const char32_t cp = text::decode(surface, pos);
  return cp == '"' || cp == ')' || cp == ']' || cp == 0x00BB ||
         cp == 0x201D || cp == 0x2019 || cp == '\'';
}

const std::unordered_set<std::string>& abbreviations(std::string_view lang) {
  static const std::unordered_set<std::string> kEnglish = {
      "mr",   "mrs",  "ms",   "dr",   "prof", "sr",   "jr",  "st",
      "mt",   "vs",   "inc",  "ltd",  "co",   "corp", "no",  "fig",
      "gen",  "gov",  "sen",  "rep",  "col",  "lt",   "sgt", "capt",
      "jan",  "feb",  "mar",  "apr",  "jun",  "jul",  "aug", "sep",
      "sept", "oct",  "nov",  "dec",  "approx", "dept", "est", "ca"};
  static const std::unordered_set<std::string> kFrench = {
      "m",  "mm", "mme", "mmes", "mlle", "mlles", "dr", "pr", "me",
      "mgr", "st", "ste", "av",  "bd",   "cf",    "p",  "env", "réf",
      "janv", "févr", "avr", "juil", "sept", "oct", "nov", "déc"};
  static const std::unordered_set<std::string> kNone;
  if (lang == "en") return kEnglish;
  if (lang == "fr") return kFrench;
  return kNone;
}

bool is_single_capital(std::string_view surface) {
  std::size_t pos = 0;
  const char32_t cp = text::decode(surface, pos);
  return pos == surface.size() && text::is_upper(cp);
}

bool has_blank_line(std::string_view gap) {
  return std::count(gap.begin(), gap.end(), '\n') >= 2;
}

// Whether a sentence ends right after terminal token `i`.
bool ends_sentence(const std::vector<Token>& tokens, std::size_t i,
                   const std::unordered_set<std::string>& abbrevs) {
  const Token& t = tokens[i];
  if (t.surface == "." && i > 0) {
    const Token& prev = tokens[i - 1];
    if (prev.kind == TokenKind::kWord && prev.char_end == t.char_start) {
      if (abbrevs.count(text::to_lower(prev.surface)) != 0) return false;
      if (is_single_capital(prev.surface)) return false;
    }
  }
  if (i + 1 == tokens.size()) return true;
  const Token& next = tokens[i + 1];
  if (is_terminal_punct(next.surface)) return false;
  if (next.is_wordlike() && next.char_start == t.char_end) return false;
  if (next.kind == TokenKind::kWord) {
    std::size_t pos = 0;
    const char32_t first = text::decode(next.surface, pos);
    if (text::is_letter(first) && !text::is_upper(first)) return false;
  }
  return true;
}

}  // namespace

bool is_numeric(std::string_view surface) {
  if (surface.empty()) return false;
  std::size_t end = surface.size();
  if (surface.back() == '%') --end;
  if (end == 0) return false;
  bool expect_digit = true;
  for (std::size_t i = 0; i < end; ++i) {
    const char c = surface[i];
    if (c >= '0' && c <= '9') {
      expect_digit = false;
    } else if ((c == '.' || c == ',') && !expect_digit) {
      expect_digit = true;
    } else {
      return false;
    }
  }
  return !expect_digit;
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    const char32_t cp = text::decode(s, pos);
    if (text::is_space(cp)) continue;

    std::size_t end = pos;
    TokenKind kind = TokenKind::kPunctuation;
    if (is_word_char(cp)) {
      end = scan_word(s, start);
      kind = is_numeric(s.substr(start, end - start)) ? TokenKind::kNumber
                                                      : TokenKind::kWord;
    } else {
      while (end < s.size()) {
        std::size_t probe = end;
        if (text::decode(s, probe) != cp) break;
        end = probe;
      }
    }
    tokens.push_back(
        Token{std::string(s.substr(start, end - start)), kind, start, end});
    pos = end;
  }
  return tokens;
}

Sentence make_sentence(std::string text, std::size_t index) {
  Sentence sentence;
  sentence.tokens = tokenize(text);
  sentence.text = std::move(text);
  sentence.index = index;
  sentence.word_count = static_cast<std::size_t>(
      std::count_if(sentence.tokens.begin(), sentence.tokens.end(),
                    [](const Token& t) { return t.is_wordlike(); }));
  return sentence;
}

std::vector<Sentence> split_sentences(std::string_view text,
                                      std::string_view language) {
  const auto tokens = tokenize(text);
  const auto& abbrevs = abbreviations(language);
  std::vector<Sentence> sentences;

  auto emit = [&](std::size_t first, std::size_t last) {
    const std::size_t begin = tokens[first].char_start;
    const std::size_t end = tokens[last].char_end;
    Sentence s;
    s.text = std::string(text.substr(begin, end - begin));
    s.index = sentences.size();
    for (std::size_t k = first; k <= last; ++k) {
      Token t = tokens[k];
      t.char_start -= begin;
      t.char_end -= begin;
      if (t.is_wordlike()) ++s.word_count;
      s.tokens.push_back(std::move(t));
    }
    sentences.push_back(std::move(s));
  };

  std::size_t first = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    bool boundary = false;
    if (is_terminal_punct(tokens[i].surface) &&
        ends_sentence(tokens, i, abbrevs)) {
      boundary = true;
      while (i + 1 < tokens.size() && is_closing_punct(tokens[i + 1].surface) &&
             tokens[i + 1].char_start == tokens[i].char_end) {
        ++i;
      }
    }
    if (!boundary && i + 1 < tokens.size()) {
      boundary = has_blank_line(text.substr(
          tokens[i].char_end, tokens[i + 1].char_start - tokens[i].char_end));
    }
    if (boundary || i + 1 == tokens.size()) {
      emit(first, i);
      first = i + 1;
    }
  }
  return sentences;
}

}  // namespace vaguescore
