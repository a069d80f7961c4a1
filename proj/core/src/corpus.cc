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

#include "vaguescore/corpus.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "vaguescore/error.h"
#include "vaguescore/text.h"

namespace vaguescore {

using nlohmann::json;

std::vector<CorpusDocument> parse_corpus(std::istream& in,
                                         const std::string& default_language,
                                         const std::string& source_name) {
  std::vector<CorpusDocument> docs;
  std::unordered_map<std::string, std::size_t> first_seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    const auto j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw ParseError(source_name, line_no, "malformed JSON record");
    }
    CorpusDocument doc;
    for (const char* field : {"id", "label", "text"}) {
      if (!j.contains(field) || !j[field].is_string()) {
        throw ParseError(source_name, line_no,
                         std::string("missing string field '") + field + "'");
      }
    }
    doc.id = j["id"].get<std::string>();
    doc.label = j["label"].get<std::string>();
    doc.text = j["text"].get<std::string>();
    doc.language = j.value("language", default_language);
    if (doc.id.empty()) throw ParseError(source_name, line_no, "empty id");
    if (doc.label.empty()) throw ParseError(source_name, line_no, "empty label");
    const auto [it, inserted] = first_seen.try_emplace(doc.id, line_no);
    if (!inserted) {
      throw ParseError(source_name, line_no,
                       "duplicate id '" + doc.id + "' (first on line " +
                           std::to_string(it->second) + ")");
    }
    docs.push_back(std::move(doc));
  }
  std::stable_sort(docs.begin(), docs.end(),
                   [](const CorpusDocument& a, const CorpusDocument& b) {
                     return a.id < b.id;
                   });
  return docs;
}

std::vector<CorpusDocument> load_corpus(const std::filesystem::path& path,
                                        const std::string& default_language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus " + path.string());
  return parse_corpus(in, default_language, path.string());
}

std::string corpus_to_jsonl(std::span<const CorpusDocument> docs) {
  std::string out;
  for (const auto& d : docs) {
    out += json{{"id", d.id},
                {"label", d.label},
                {"language", d.language},
                {"text", d.text}}
               .dump();
    out += '\n';
  }
  return out;
}

std::vector<DocumentReport> analyze_corpus(std::span<const CorpusDocument> docs,
                                           const Analyzer& analyzer,
                                           const EntityAnnotations* annotations,
                                           std::size_t threads) {
  for (const auto& d : docs) {
    if (d.language != analyzer.language()) {
      throw Error("document '" + d.id + "' is in " + d.language +
                  " but the lexicon is " + analyzer.language());
    }
  }
  std::vector<DocumentReport> reports(docs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= docs.size()) return;
      try {
        reports[i] =
            analyzer.analyze(docs[i].id, docs[i].text, annotations, docs[i].label);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = docs.size();
      }
    }
  };

  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(docs.size(), 1));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

CorpusSummary summarize(std::span<const DocumentReport> reports) {
  CorpusSummary s;
  for (const auto& r : reports) {
    if (r.excluded) {
      ++s.excluded;
    } else {
      ++s.processed;
    }
  }
  return s;
}

}  // namespace vaguescore
