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

#ifndef VAGUESCORE_CORPUS_H_
#define VAGUESCORE_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vaguescore/analyzer.h"
#include "vaguescore/entities.h"

namespace vaguescore {

struct CorpusDocument {
  std::string id;
  std::string label;
  std::string text;
  std::string language;
};

// One JSON record per line: {"id": str, "label": str, "text": str} with an
// optional "language" overriding `default_language`. Documents come back
// sorted by id. Duplicate ids, missing fields and malformed lines throw
// ParseError carrying the line number.
std::vector<CorpusDocument> parse_corpus(std::istream& in,
                                         const std::string& default_language,
                                         const std::string& source_name =
                                             "<corpus>");
std::vector<CorpusDocument> load_corpus(const std::filesystem::path& path,
                                        const std::string& default_language);

std::string corpus_to_jsonl(std::span<const CorpusDocument> docs);

// Scores every document, `threads` at a time. The result is ordered like
// `docs` whatever the thread count. Throws if a document's language differs
// from the analyzer's.
std::vector<DocumentReport> analyze_corpus(
    std::span<const CorpusDocument> docs, const Analyzer& analyzer,
    const EntityAnnotations* annotations = nullptr, std::size_t threads = 1);

// `processed` counts documents with at least one scored sentence.
struct CorpusSummary {
  std::size_t processed = 0;
  std::size_t excluded = 0;
};
CorpusSummary summarize(std::span<const DocumentReport> reports);

}  // namespace vaguescore

#endif  // VAGUESCORE_CORPUS_H_
