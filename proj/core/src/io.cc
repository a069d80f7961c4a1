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

#include "vaguescore/io.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "vaguescore/error.h"

#ifndef VAGUESCORE_INSTALL_DATA_DIR
#define VAGUESCORE_INSTALL_DATA_DIR ""
#endif
#ifndef VAGUESCORE_SOURCE_DATA_DIR
#define VAGUESCORE_SOURCE_DATA_DIR ""
#endif

namespace vaguescore {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("error writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename into " + path.string());
  }
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("VAGUESCORE_DATA_DIR"); env && *env) {
    return env;
  }
  const std::filesystem::path installed = VAGUESCORE_INSTALL_DATA_DIR;
  if (!installed.empty() &&
      std::filesystem::exists(installed / "lexicon")) {
    return installed;
  }
  return VAGUESCORE_SOURCE_DATA_DIR;
}

std::filesystem::path seed_lexicon_path(std::string_view language) {
  return data_dir() / "lexicon" / (std::string(language) + ".tsv");
}

std::filesystem::path comparatives_path(std::string_view language) {
  return data_dir() / "rules" / (std::string(language) + "_comparatives.tsv");
}

std::filesystem::path units_path(std::string_view language) {
  return data_dir() / "rules" / (std::string(language) + "_units.txt");
}

}  // namespace vaguescore
