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

#include "vaguescore/matcher.h"

#include <fstream>
#include <istream>

#include "vaguescore/error.h"
#include "vaguescore/io.h"
#include "vaguescore/text.h"

namespace vaguescore {

namespace {

// Window sizes for the two cancellation contexts.
constexpr std::size_t kDegreeMarkerWindow = 1;
constexpr std::size_t kMeasureWindow = 2;

std::string lower_at(const Sentence& s, std::size_t i) {
  return text::to_lower(s.tokens[i].surface);
}

bool is_superlative(const VagueMatch& m, const Sentence& sentence,
                    const CancellationRules& rules) {
  if (rules.language == "en" && m.token_len == 1) {
    const auto& w = m.surface;
    if (w.size() > 4 && w.compare(w.size() - 3, 3, "est") == 0) return true;
  }
  if (m.token_start >= 2 && !rules.superlative_articles.empty() &&
      rules.degree_markers.count(lower_at(sentence, m.token_start - 1)) != 0 &&
      rules.superlative_articles.count(lower_at(sentence, m.token_start - 2)) !=
          0) {
    return true;
  }
  return false;
}

}  // namespace

std::string_view cancel_reason_label(CancelReason reason) {
  switch (reason) {
    case CancelReason::kComparative:
      return "comparative";
    case CancelReason::kMeasurePhrase:
      return "measure_phrase";
  }
  return "unknown";
}

std::optional<CancelReason> parse_cancel_reason(std::string_view label) {
  if (label == "comparative") return CancelReason::kComparative;
  if (label == "measure_phrase") return CancelReason::kMeasurePhrase;
  return std::nullopt;
}

CancellationRules CancellationRules::defaults_for(std::string_view language) {
  CancellationRules rules;
  rules.language = std::string(language);
  if (language == "en") {
    rules.degree_markers = {"more", "less"};
    rules.standard_markers = {"than"};
  } else if (language == "fr") {
    rules.degree_markers = {"plus", "moins"};
    rules.standard_markers = {"que", "qu'", "qu\xE2\x80\x99"};
    rules.superlative_articles = {"le", "la", "les"};
  }
  return rules;
}

void parse_comparatives(std::istream& in, CancellationRules& rules,
                        const std::string& source_name) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto stripped = text::trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto fields = text::split(stripped, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(source_name, line_no,
                       "expected inflected<TAB>base[<TAB>form]");
    }
    InflectedForm form{text::to_lower(text::trim(fields[1])), true};
    if (fields.size() == 3) {
      const auto kind = text::trim(fields[2]);
      if (kind == "inflection") {
        form.comparative = false;
      } else if (kind != "comparative") {
        throw ParseError(source_name, line_no,
                         "unknown form '" + std::string(kind) + "'");
      }
    }
    const auto inflected = text::to_lower(text::trim(fields[0]));
    if (inflected.empty() || form.base.empty()) {
      throw ParseError(source_name, line_no, "empty form");
    }
    rules.inflections[inflected] = std::move(form);
  }
}

void parse_units(std::istream& in, CancellationRules& rules) {
  std::string line;
  while (std::getline(in, line)) {
    const auto stripped = text::trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    rules.units.insert(text::to_lower(stripped));
  }
}

CancellationRules load_cancellation_rules(
    std::string_view language, const std::filesystem::path& comparatives,
    const std::filesystem::path& units) {
  auto rules = CancellationRules::defaults_for(language);
  if (!comparatives.empty()) {
    std::ifstream in(comparatives, std::ios::binary);
    if (!in) throw IoError("cannot open " + comparatives.string());
    parse_comparatives(in, rules, comparatives.string());
  }
  if (!units.empty()) {
    std::ifstream in(units, std::ios::binary);
    if (!in) throw IoError("cannot open " + units.string());
    parse_units(in, rules);
  }
  return rules;
}

CancellationRules bundled_cancellation_rules(std::string_view language) {
  auto comparatives = comparatives_path(language);
  auto units = units_path(language);
  if (!std::filesystem::exists(comparatives)) comparatives.clear();
  if (!std::filesystem::exists(units)) units.clear();
  return load_cancellation_rules(language, comparatives, units);
}

std::vector<VagueMatch> find_vague_terms(const Sentence& sentence,
                                         const Lexicon& lexicon,
                                         const CancellationRules& rules) {
  std::vector<VagueMatch> matches;
  std::vector<std::string> words;
  words.reserve(sentence.tokens.size());
  for (const auto& t : sentence.tokens) words.push_back(t.surface);

  const std::size_t n = sentence.tokens.size();
  std::size_t i = 0;
  while (i < n) {
    if (!sentence.tokens[i].is_wordlike()) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < n && sentence.tokens[run_end].is_wordlike()) ++run_end;

    const std::span<const std::string> run(words.data(), run_end);
    std::optional<LexiconMatch> hit = lexicon.lookup_longest(run, i);
    if (!hit) {
      const auto it = rules.inflections.find(text::to_lower(words[i]));
      if (it != rules.inflections.end()) {
        const auto* base = lexicon.find(it->second.base);
        if (base != nullptr && base->category == VaguenessCategory::kDegree) {
          hit = LexiconMatch{base, 1};
        }
      }
    }
    if (!hit) {
      ++i;
      continue;
    }
    VagueMatch m;
    m.entry = *hit->entry;
    m.token_start = i;
    m.token_len = hit->length;
    for (std::size_t k = i; k < i + hit->length; ++k) {
      if (k > i) m.surface += ' ';
      m.surface += text::to_lower(words[k]);
    }
    matches.push_back(std::move(m));
    i += hit->length;
  }
  return matches;
}

std::vector<VagueMatch> find_vague_terms(const Sentence& sentence,
                                         const Lexicon& lexicon) {
  return find_vague_terms(sentence, lexicon,
                          CancellationRules::defaults_for(lexicon.language()));
}

std::vector<VagueMatch> apply_cancellation(std::vector<VagueMatch> matches,
                                           const Sentence& sentence,
                                           const CancellationRules& rules) {
  const auto& tokens = sentence.tokens;
  for (auto& m : matches) {
    if (m.cancelled || m.entry.category != VaguenessCategory::kDegree) continue;
    if (is_superlative(m, sentence, rules)) continue;

    bool marked = false;
    if (m.token_start >= kDegreeMarkerWindow &&
        rules.degree_markers.count(
            lower_at(sentence, m.token_start - kDegreeMarkerWindow)) != 0) {
      marked = true;
    }
    if (m.token_len == 1) {
      const auto it = rules.inflections.find(m.surface);
      if (it != rules.inflections.end() && it->second.comparative) {
        marked = true;
      }
    }
    if (marked) {
      for (std::size_t k = m.token_start + m.token_len; k < tokens.size();
           ++k) {
        if (rules.standard_markers.count(lower_at(sentence, k)) != 0) {
          m.cancelled = true;
          m.cancel_reason = CancelReason::kComparative;
          break;
        }
      }
      if (m.cancelled) continue;
    }

    if (m.token_start >= kMeasureWindow) {
      const auto& number = tokens[m.token_start - kMeasureWindow];
      const auto& unit = tokens[m.token_start - kMeasureWindow + 1];
      if (number.kind == TokenKind::kNumber &&
          rules.units.count(text::to_lower(unit.surface)) != 0) {
        m.cancelled = true;
        m.cancel_reason = CancelReason::kMeasurePhrase;
      }
    }
  }
  return matches;
}

}  // namespace vaguescore
