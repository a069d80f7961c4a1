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

#include "vaguescore/synthetic.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <string_view>

#include "vaguescore/error.h"
#include "vaguescore/text.h"

namespace vaguescore {

namespace {

constexpr std::string_view kNeutral[] = {
    "table",   "river",   "window",  "garden",  "letter",  "bridge",
    "kitchen", "pencil",  "market",  "station", "farmer",  "teacher",
    "doctor",  "basket",  "engine",  "harbor",  "meadow",  "ladder",
    "village", "printer", "blanket", "carpet",  "bottle",  "wagon",
    "orchard", "tunnel",  "painter", "sailor",  "council", "library",
    "walked",  "carried", "opened",  "painted", "visited", "counted",
    "crossed", "signed",  "moved",   "cleaned", "checked", "folded",
    "returned", "entered", "closed", "listed",  "noted",   "filed",
    "and",     "with",    "from",    "into",    "onto",    "under",
    "near",    "beside",  "after",   "before",  "during",  "across"};

constexpr std::string_view kNames[] = {
    "Paris",   "Berlin",  "Lisbon",  "Oslo",    "Nairobi", "Quito",
    "Hanoi",   "Lima",    "Dublin",  "Vienna",  "Toronto", "Madrid",
    "Alice",   "Omar",    "Ingrid",  "Tariq",   "Mei",     "Lucas",
    "Siemens", "Unesco",  "Nasa",    "Renault", "Danube",  "Andes"};

// Words the entity heuristics treat as joiners between capitalized words.
constexpr std::string_view kConnectors[] = {"of", "de", "the", "du", "la",
                                            "le"};

template <typename T>
const T& pick(Random& rng, const std::vector<T>& pool) {
  return pool[rng.below(pool.size())];
}

std::string capitalized(std::string_view word) {
  std::string out(word);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] -= 'a' - 'A';
  return out;
}

std::string random_number(Random& rng) {
  char buf[16];
  if (rng.bernoulli(0.4)) {
    std::snprintf(buf, sizeof buf, "%d", 1900 + static_cast<int>(rng.below(125)));
  } else {
    std::snprintf(buf, sizeof buf, "%d", 2 + static_cast<int>(rng.below(997)));
  }
  return buf;
}

std::vector<std::string> sorted_strings(
    const std::unordered_set<std::string>& set) {
  std::vector<std::string> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SyntheticVocabulary SyntheticVocabulary::build(const Lexicon& lexicon,
                                               const CancellationRules& rules) {
  SyntheticVocabulary v;
  std::set<std::string> lexicon_words;
  std::set<std::string> in_multiword;
  for (const auto& e : lexicon.entries()) {
    const auto words = text::split(e.term, ' ');
    for (const auto w : words) lexicon_words.emplace(w);
    if (words.size() > 1) {
      v.multiword.push_back(e);
      for (const auto w : words) in_multiword.emplace(w);
    }
  }
  for (const auto& e : lexicon.entries()) {
    if (e.term.find(' ') != std::string::npos) continue;
    if (in_multiword.count(e.term)) continue;
    if (rules.degree_markers.count(e.term) ||
        rules.standard_markers.count(e.term) || rules.units.count(e.term)) {
      continue;
    }
    v.vague.push_back(e);
    if (e.category == VaguenessCategory::kDegree) v.degree.push_back(e);
  }
  if (v.vague.empty()) throw Error("lexicon has no usable single-word term");

  auto reserved = [&](const std::string& w) {
    return lexicon_words.count(w) || rules.inflections.count(w) ||
           rules.units.count(w) || rules.degree_markers.count(w) ||
           rules.standard_markers.count(w) ||
           rules.superlative_articles.count(w) ||
           std::find(std::begin(kConnectors), std::end(kConnectors), w) !=
               std::end(kConnectors);
  };
  for (const auto w : kNeutral) {
    std::string word(w);
    if (reserved(word)) {
      throw Error("neutral filler word '" + word + "' is reserved by the " +
                  lexicon.language() + " lexicon or rule tables");
    }
    v.neutral.push_back(std::move(word));
  }
  for (const auto n : kNames) {
    if (reserved(text::to_lower(n))) {
      throw Error("entity name '" + std::string(n) + "' is a lexicon term");
    }
    v.names.emplace_back(n);
  }
  for (const auto& [form, row] : rules.inflections) {
    if (!row.comparative) continue;
    const auto* base = lexicon.find(row.base);
    if (base && base->category == VaguenessCategory::kDegree) {
      v.comparative_forms.push_back(form);
    }
  }
  std::sort(v.comparative_forms.begin(), v.comparative_forms.end());
  v.units = sorted_strings(rules.units);
  v.degree_markers = sorted_strings(rules.degree_markers);
  v.standard_markers = sorted_strings(rules.standard_markers);
  return v;
}

std::vector<SyntheticDocument> generate_corpus(const SyntheticVocabulary& vocab,
                                               const SyntheticConfig& config) {
  if (config.min_words < 3 || config.max_words < config.min_words) {
    throw Error("sentence length range must start at 3 or more");
  }
  Random rng(config.seed);
  std::vector<SyntheticDocument> docs;
  docs.reserve(config.documents);
  for (std::size_t d = 0; d < config.documents; ++d) {
    const bool satirical = d % 2 == 1;
    const double vague_density = satirical ? config.satirical_vague_density
                                           : config.regular_vague_density;
    SyntheticDocument doc;
    char id[32];
    std::snprintf(id, sizeof id, "syn-%04zu", d);
    doc.document.id = id;
    doc.document.label =
        satirical ? config.satirical_label : config.regular_label;
    doc.document.language = "en";
    for (std::size_t s = 0; s < config.sentences_per_document; ++s) {
      const std::size_t words =
          config.min_words +
          rng.below(config.max_words - config.min_words + 1);
      SentencePlan plan;
      plan.words = words;
      std::string sentence = capitalized(pick(rng, vocab.neutral));
      bool previous_entity = false;
      for (std::size_t w = 1; w < words; ++w) {
        sentence += ' ';
        const bool last = w + 1 == words;
        if (!last && rng.bernoulli(vague_density)) {
          const auto& e = pick(rng, vocab.vague);
          sentence += e.term;
          ++plan.vague;
          if (is_subjective(e.category)) ++plan.subjective;
          previous_entity = false;
        } else if (!last && w >= 2 && !previous_entity &&
                   rng.bernoulli(config.entity_density)) {
          sentence += rng.bernoulli(0.5) ? pick(rng, vocab.names)
                                         : random_number(rng);
          ++plan.entities;
          previous_entity = true;
        } else {
          sentence += pick(rng, vocab.neutral);
          previous_entity = false;
        }
      }
      sentence += '.';
      if (!doc.document.text.empty()) doc.document.text += ' ';
      doc.document.text += sentence;
      doc.plan.push_back(plan);
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<CorpusDocument> corpus_documents(
    const std::vector<SyntheticDocument>& docs) {
  std::vector<CorpusDocument> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(d.document);
  return out;
}

std::string random_mixed_sentence(Random& rng,
                                  const SyntheticVocabulary& vocab) {
  std::vector<std::string> parts;
  parts.push_back(rng.bernoulli(0.2) ? pick(rng, vocab.names)
                                     : capitalized(pick(rng, vocab.neutral)));
  const std::size_t segments = 1 + rng.below(6);
  for (std::size_t s = 0; s < segments; ++s) {
    switch (rng.below(10)) {
      case 0:
        parts.push_back(pick(rng, vocab.vague).term);
        break;
      case 1:
        if (!vocab.multiword.empty()) {
          parts.push_back(pick(rng, vocab.multiword).term);
        }
        break;
      case 2:
        if (!vocab.degree.empty() && !vocab.degree_markers.empty()) {
          parts.push_back(pick(rng, vocab.degree_markers));
          parts.push_back(pick(rng, vocab.degree).term);
          if (rng.bernoulli(0.6) && !vocab.standard_markers.empty()) {
            parts.push_back(pick(rng, vocab.standard_markers));
            parts.push_back(pick(rng, vocab.names));
          }
        }
        break;
      case 3:
        if (!vocab.comparative_forms.empty()) {
          parts.push_back(pick(rng, vocab.comparative_forms));
          if (rng.bernoulli(0.6) && !vocab.standard_markers.empty()) {
            parts.push_back(pick(rng, vocab.standard_markers));
            parts.push_back(pick(rng, vocab.neutral));
          }
        }
        break;
      case 4:
        if (!vocab.degree.empty() && !vocab.units.empty()) {
          parts.push_back(random_number(rng));
          parts.push_back(pick(rng, vocab.units));
          parts.push_back(pick(rng, vocab.degree).term);
        }
        break;
      case 5:
        parts.push_back(pick(rng, vocab.names));
        break;
      case 6:
        parts.push_back(random_number(rng));
        break;
      case 7:
        parts.back() += ',';
        break;
      default:
        parts.push_back(pick(rng, vocab.neutral));
        break;
    }
    if (rng.bernoulli(0.5)) parts.push_back(pick(rng, vocab.neutral));
  }
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  if (!out.empty() && out.back() == ',') out.pop_back();
  out += rng.bernoulli(0.8) ? "." : "!";
  return out;
}

}  // namespace vaguescore
