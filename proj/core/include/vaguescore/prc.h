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

#ifndef VAGUESCORE_PRC_H_
#define VAGUESCORE_PRC_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vaguescore/analyzer.h"
#include "vaguescore/rational.h"

namespace vaguescore {

// The ten fact-or-opinion statements of the Pew Research Center news survey,
// one document each, labelled with the survey's own classification.
std::filesystem::path prc_fixture_path();

struct PrcVerdict {
  std::string id;
  std::string text;
  std::string survey_label;  // "fact" or "opinion"
  bool opinion = false;
  bool vague = false;
  std::optional<Rational> detail_vs_vagueness;
  std::vector<std::string> matched_terms;  // uncancelled, in order

  std::string label() const { return opinion ? "opinion" : "fact"; }
};

// Scores every fixture statement as a single-sentence document. Throws
// IoError when the fixture is missing.
std::vector<PrcVerdict> classify_prc_benchmark(
    const Analyzer& analyzer,
    const std::filesystem::path& fixture = prc_fixture_path());

}  // namespace vaguescore

#endif  // VAGUESCORE_PRC_H_
