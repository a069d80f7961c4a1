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

#ifndef VAGUESCORE_REPORT_H_
#define VAGUESCORE_REPORT_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "vaguescore/analyzer.h"
#include "vaguescore/rational.h"

namespace vaguescore {

inline constexpr int kReportSchemaVersion = 1;

// A ratio rounded to six fractional digits, as a JSON number.
nlohmann::json decimal_json(const Rational& r);
double round6(double value);

nlohmann::json report_to_json(const DocumentReport& report);

// Rebuilds a report from its JSON form. Sentences are re-tokenized from their
// text and scores recomputed from the stored counts; a schema version other
// than kReportSchemaVersion, or counts that disagree with the text, throw
// SchemaError.
DocumentReport report_from_json(const nlohmann::json& j);

// One compact JSON object per line.
std::string reports_to_jsonl(std::span<const DocumentReport> reports);

// Accepts either a single JSON report or one report per line.
std::vector<DocumentReport> parse_reports(std::string_view content,
                                          const std::string& source_name);
std::vector<DocumentReport> read_reports(const std::filesystem::path& path);

}  // namespace vaguescore

#endif  // VAGUESCORE_REPORT_H_
