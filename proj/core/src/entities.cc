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

#include <algorithm>
#include <fstream>
#include <istream>

#include <nlohmann/json.hpp>

#include "vaguescore/error.h"
#include "vaguescore/text.h"

namespace vaguescore {

namespace {

bool is_connector(std::string_view surface) {
  return surface == "of" || surface == "de" || surface == "the" ||
         surface == "du" || surface == "la" || surface == "le";
}

bool is_capitalized_word(const Token& t) {
  // The English pronoun is capitalized but never a name.
  return t.kind == TokenKind::kWord && t.surface != "I" &&
         text::starts_upper(t.surface);
}

bool is_year(std::string_view surface) {
  return surface.size() == 4 &&
         std::all_of(surface.begin(), surface.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

std::size_t first_word_index(const Sentence& s) {
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    if (s.tokens[i].is_wordlike()) return i;
  }
  return s.tokens.size();
}

}  // namespace

std::string_view entity_kind_label(EntityKind kind) {
  switch (kind) {
    case EntityKind::kName:
      return "person-or-place-like";
    case EntityKind::kNumber:
      return "number";
    case EntityKind::kDate:
      return "date";
    case EntityKind::kOther:
      return "other";
  }
  return "other";
}

std::optional<EntityKind> parse_entity_kind(std::string_view label) {
  if (label == "person-or-place-like") return EntityKind::kName;
  if (label == "number") return EntityKind::kNumber;
  if (label == "date") return EntityKind::kDate;
  if (label == "other") return EntityKind::kOther;
  return std::nullopt;
}

CapitalizationContext::CapitalizationContext(
    std::span<const Sentence> document) {
  for (const auto& s : document) {
    const std::size_t first = first_word_index(s);
    for (std::size_t i = first + 1; i < s.tokens.size(); ++i) {
      if (is_capitalized_word(s.tokens[i])) surfaces_.insert(s.tokens[i].surface);
    }
  }
}

std::vector<EntitySpan> detect_entities(const Sentence& sentence,
                                        const CapitalizationContext* context) {
  std::vector<EntitySpan> spans;
  const auto& tokens = sentence.tokens;
  const std::size_t initial = first_word_index(sentence);

  auto counts_as_name = [&](std::size_t i) {
    if (!is_capitalized_word(tokens[i])) return false;
    if (i != initial) return true;
    return context != nullptr && context->seen_mid_sentence(tokens[i].surface);
  };

  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token& t = tokens[i];
    if (t.kind == TokenKind::kNumber) {
      spans.push_back(
          {i, 1, is_year(t.surface) ? EntityKind::kDate : EntityKind::kNumber});
      ++i;
      continue;
    }
    if (!counts_as_name(i)) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < tokens.size()) {
      if (is_capitalized_word(tokens[end])) {
        ++end;
        continue;
      }
      // Connectors only join when another capitalized word follows.
      std::size_t k = end;
      while (k < tokens.size() && tokens[k].kind == TokenKind::kWord &&
             is_connector(tokens[k].surface)) {
        ++k;
      }
      if (k > end && k < tokens.size() && is_capitalized_word(tokens[k])) {
        end = k + 1;
        continue;
      }
      break;
    }
    spans.push_back({i, end - i, EntityKind::kName});
    i = end;
  }
  return spans;
}

void validate_spans(std::span<const EntitySpan> spans,
                    const Sentence& sentence) {
  std::vector<EntitySpan> sorted(spans.begin(), spans.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const EntitySpan& a, const EntitySpan& b) {
              return a.token_start < b.token_start;
            });
  std::size_t covered_to = 0;
  for (const auto& s : sorted) {
    if (s.token_len == 0) throw Error("entity span has zero length");
    if (s.token_start + s.token_len > sentence.tokens.size()) {
      throw Error("entity span [" + std::to_string(s.token_start) + ", +" +
                  std::to_string(s.token_len) + ") exceeds the " +
                  std::to_string(sentence.tokens.size()) +
                  " tokens of sentence " + std::to_string(sentence.index));
    }
    if (s.token_start < covered_to) {
      throw Error("overlapping entity spans in sentence " +
                  std::to_string(sentence.index));
    }
    covered_to = s.token_start + s.token_len;
  }
}

EntityAnnotations parse_annotations(std::istream& in,
                                    const std::string& source_name) {
  EntityAnnotations out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      const auto record = nlohmann::json::parse(line);
      const auto doc_id = record.at("doc_id").get<std::string>();
      const auto sent_index = record.at("sent_index").get<std::size_t>();
      std::vector<EntitySpan> spans;
      for (const auto& e : record.at("entities")) {
        EntitySpan span;
        span.token_start = e.at("start").get<std::size_t>();
        span.token_len = e.at("len").get<std::size_t>();
        if (span.token_len == 0) {
          throw ParseError(source_name, line_no, "entity with len 0");
        }
        if (e.contains("kind")) {
          const auto label = e.at("kind").get<std::string>();
          const auto kind = parse_entity_kind(label);
          if (!kind) {
            throw ParseError(source_name, line_no,
                             "unknown entity kind '" + label + "'");
          }
          span.kind = *kind;
        }
        spans.push_back(span);
      }
      const auto [it, inserted] =
          out.try_emplace(AnnotationKey{doc_id, sent_index}, std::move(spans));
      if (!inserted) {
        throw ParseError(source_name, line_no,
                         "duplicate annotation for (" + doc_id + ", " +
                             std::to_string(sent_index) + ")");
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(source_name, line_no,
                       std::string("malformed record: ") + e.what());
    }
  }
  return out;
}

EntityAnnotations ingest_annotations(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open annotations " + path.string());
  return parse_annotations(in, path.string());
}

}  // namespace vaguescore
