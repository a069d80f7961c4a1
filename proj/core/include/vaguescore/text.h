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

#ifndef VAGUESCORE_TEXT_H_
#define VAGUESCORE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vaguescore::text {

// Minimal UTF-8 helpers. Case folding covers ASCII, Latin-1, Latin
// Extended-A, basic Greek and Cyrillic, which is enough for the English and
// French material this library targets.

// Decodes the code point starting at `pos` and advances `pos` past it.
// Malformed sequences decode as U+FFFD and consume one byte.
char32_t decode(std::string_view s, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_apostrophe(char32_t cp);

char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view s);

// True if the first code point of `s` is an uppercase letter.
bool starts_upper(std::string_view s);

std::string_view trim(std::string_view s);

// Splits on every occurrence of `sep`, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char sep);

// Collapses internal whitespace runs to a single ASCII space and trims.
std::string normalize_spaces(std::string_view s);

}  // namespace vaguescore::text

#endif  // VAGUESCORE_TEXT_H_
