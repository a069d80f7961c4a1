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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "vaguescore/error.h"
#include "vaguescore/io.h"
#include "vaguescore/text.h"

namespace vaguescore {

namespace {

std::size_t word_count(std::string_view term) {
  return static_cast<std::size_t>(std::count(term.begin(), term.end(), ' ')) +
         1;
}

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string_view category_label(VaguenessCategory c) {
  switch (c) {
    case VaguenessCategory::kApproximation:
      return "V_A";
    case VaguenessCategory::kGenerality:
      return "V_G";
    case VaguenessCategory::kDegree:
      return "V_D";
    case VaguenessCategory::kCombinatorial:
      return "V_C";
  }
  return "V_?";
}

std::optional<VaguenessCategory> parse_category(std::string_view label) {
  for (const auto c : kAllCategories) {
    if (category_label(c) == label) return c;
  }
  return std::nullopt;
}

bool is_language_code(std::string_view code) {
  return code.size() == 2 && code[0] >= 'a' && code[0] <= 'z' &&
         code[1] >= 'a' && code[1] <= 'z';
}

Lexicon::Lexicon(std::string language) : language_(std::move(language)) {
  if (!is_language_code(language_)) {
    throw LexiconError("invalid language code '" + language_ + "'");
  }
}

Lexicon Lexicon::from_entries(std::string language,
                              std::vector<LexiconEntry> entries) {
  Lexicon lex(std::move(language));
  for (auto& e : entries) {
    if (e.term.find_first_of("\t\n\r") != std::string::npos) {
      throw LexiconError("term contains a tab or newline: '" + e.term + "'");
    }
    e.term = text::to_lower(text::normalize_spaces(e.term));
    if (e.term.empty()) throw LexiconError("empty term");
    if (e.language.empty()) e.language = lex.language_;
    if (e.language != lex.language_) {
      throw LexiconError("entry '" + e.term + "' has language " + e.language +
                         ", lexicon is " + lex.language_);
    }
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].term == entries[i - 1].term) {
      throw LexiconError("term '" + entries[i].term +
                         "' is listed under both " +
                         std::string(category_label(entries[i - 1].category)) +
                         " and " +
                         std::string(category_label(entries[i].category)));
    }
  }
  lex.entries_ = std::move(entries);
  for (std::size_t i = 0; i < lex.entries_.size(); ++i) {
    const auto& e = lex.entries_[i];
    lex.index_.emplace(e.term, i);
    ++count_of(lex.counts_, e.category);
    lex.max_words_ = std::max(lex.max_words_, word_count(e.term));
  }
  return lex;
}

const LexiconEntry* Lexicon::find(std::string_view term) const {
  const auto it = index_.find(std::string(term));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::optional<LexiconMatch> Lexicon::lookup_longest(
    std::span<const std::string> words, std::size_t start) const {
  if (start >= words.size() || entries_.empty()) return std::nullopt;
  const std::size_t longest = std::min(max_words_, words.size() - start);

  std::vector<std::string> lowered;
  lowered.reserve(longest);
  for (std::size_t i = 0; i < longest; ++i) {
    lowered.push_back(text::to_lower(words[start + i]));
  }
  for (std::size_t len = longest; len >= 1; --len) {
    std::string key = lowered[0];
    for (std::size_t i = 1; i < len; ++i) {
      key += ' ';
      key += lowered[i];
    }
    if (const auto* entry = find(key)) return LexiconMatch{entry, len};
  }
  return std::nullopt;
}

Lexicon parse_lexicon(std::istream& in, std::string language,
                      const std::string& source_name) {
  if (!is_language_code(language)) {
    throw LexiconError("invalid language code '" + language + "'");
  }
  std::vector<LexiconEntry> entries;
  std::unordered_map<std::string, std::pair<VaguenessCategory, std::size_t>>
      seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    const auto stripped = text::trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    const auto fields = text::split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(source_name, line_no,
                       "expected term<TAB>category[<TAB>score]");
    }
    const std::string term =
        text::to_lower(text::normalize_spaces(fields[0]));
    if (term.empty()) throw ParseError(source_name, line_no, "empty term");
    const auto label = text::trim(fields[1]);
    const auto category = parse_category(label);
    if (!category) {
      throw ParseError(source_name, line_no,
                       "unknown category '" + std::string(label) + "'");
    }
    if (fields.size() == 3 && !is_decimal(text::trim(fields[2]))) {
      throw ParseError(source_name, line_no,
                       "score column is not a decimal number");
    }
    const auto [it, inserted] = seen.try_emplace(term, *category, line_no);
    if (!inserted) {
      if (it->second.first != *category) {
        throw ParseError(
            source_name, line_no,
            "term '" + term + "' already listed as " +
                std::string(category_label(it->second.first)) + " on line " +
                std::to_string(it->second.second));
      }
      continue;
    }
    entries.push_back({term, *category, language});
  }
  return Lexicon::from_entries(std::move(language), std::move(entries));
}

Lexicon load_lexicon(const std::filesystem::path& path, std::string language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon " + path.string());
  return parse_lexicon(in, std::move(language), path.string());
}

Lexicon merge_lexicons(const Lexicon& base, const Lexicon& addition) {
  if (base.language() != addition.language()) {
    throw LexiconError("cannot merge lexicons of languages " +
                       base.language() + " and " + addition.language());
  }
  for (const auto& e : addition.entries()) {
    if (const auto* existing = base.find(e.term);
        existing != nullptr && existing->category != e.category) {
      throw LexiconError(
          "category conflict for term '" + e.term + "': " +
          std::string(category_label(existing->category)) + " vs " +
          std::string(category_label(e.category)));
    }
  }
  std::vector<LexiconEntry> all(base.entries().begin(), base.entries().end());
  all.insert(all.end(), addition.entries().begin(), addition.entries().end());
  return Lexicon::from_entries(base.language(), std::move(all));
}

std::string to_tsv(const Lexicon& lexicon) {
  std::ostringstream out;
  out << "# language: " << lexicon.language() << '\n';
  for (const auto& e : lexicon.entries()) {
    out << e.term << '\t' << category_label(e.category) << '\n';
  }
  return out.str();
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  write_file_atomic(path, to_tsv(lexicon));
}

}  // namespace vaguescore
