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

#ifndef VAGUESCORE_ERROR_H_
#define VAGUESCORE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vaguescore {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parse failure in a line-oriented input file. `line()` is 1-based, or 0
// when the failure is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& what)
      : Error(source + (line > 0 ? ":" + std::to_string(line) : "") + ": " +
              what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class LexiconError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace vaguescore

#endif  // VAGUESCORE_ERROR_H_
