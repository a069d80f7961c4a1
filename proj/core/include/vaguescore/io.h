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

#ifndef VAGUESCORE_IO_H_
#define VAGUESCORE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace vaguescore {

std::string read_text_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partially written file.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Installed or source-tree directory holding the seed lexicons, rule tables
// and benchmark fixtures. The VAGUESCORE_DATA_DIR environment variable wins.
std::filesystem::path data_dir();

std::filesystem::path seed_lexicon_path(std::string_view language);
std::filesystem::path comparatives_path(std::string_view language);
std::filesystem::path units_path(std::string_view language);

}  // namespace vaguescore

#endif  // VAGUESCORE_IO_H_
