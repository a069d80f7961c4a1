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

#ifndef VAGUESCORE_ENTITIES_H_
#define VAGUESCORE_ENTITIES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vaguescore/segmenter.h"

namespace vaguescore {

enum class EntityKind : std::uint8_t { kName, kNumber, kDate, kOther };

// Wire spelling: "person-or-place-like", "number", "date", "other".
std::string_view entity_kind_label(EntityKind kind);
std::optional<EntityKind> parse_entity_kind(std::string_view label);

struct EntitySpan {
  std::size_t token_start = 0;
  std::size_t token_len = 1;
  EntityKind kind = EntityKind::kOther;

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

// Surfaces seen capitalized away from sentence start anywhere in a
// document. A capitalized sentence-initial word only counts as a name when
// it also appears here.
class CapitalizationContext {
 public:
  CapitalizationContext() = default;
  explicit CapitalizationContext(std::span<const Sentence> document);

  bool seen_mid_sentence(std::string_view surface) const {
    return surfaces_.count(std::string(surface)) != 0;
  }

 private:
  std::unordered_set<std::string> surfaces_;
};

// Heuristic named-entity spans, left to right and non-overlapping:
//  - maximal runs of capitalized words, possibly joined by the lowercase
//    connectors of/de/the/du/la/le;
//  - number tokens, with four-digit years tagged as dates.
// The first word of the sentence is dropped from a name run unless
// `context` has seen it capitalized mid-sentence.
std::vector<EntitySpan> detect_entities(
    const Sentence& sentence, const CapitalizationContext* context = nullptr);

// Throws Error if a span is empty, overlaps another, or runs past the
// sentence's tokens.
void validate_spans(std::span<const EntitySpan> spans, const Sentence& sentence);

// (doc id, sentence index) -> spans supplied by an external annotator.
using AnnotationKey = std::pair<std::string, std::size_t>;
using EntityAnnotations = std::map<AnnotationKey, std::vector<EntitySpan>>;

// One JSON record per line:
//   {"doc_id": str, "sent_index": int,
//    "entities": [{"start": int, "len": int, "kind": str}]}
// Token offsets index the sentence's full token list, punctuation included.
EntityAnnotations parse_annotations(std::istream& in,
                                    const std::string& source_name =
                                        "<annotations>");
EntityAnnotations ingest_annotations(const std::filesystem::path& path);

}  // namespace vaguescore

#endif  // VAGUESCORE_ENTITIES_H_
