//
// Copyright 2026 The Genderation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef GENDERATION_ERRORS_H_
#define GENDERATION_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace genderation {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input data. The CLI maps these to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A record that could not be parsed or violates a schema rule. `line` is
// 1-based; 0 means the error is not tied to a line.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& origin, std::size_t line,
             const std::string& message)
      : ValidationError(Format(origin, line, message)), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  static std::string Format(const std::string& origin, std::size_t line,
                            const std::string& message) {
    std::string out = origin;
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": " + message;
  }

  std::size_t line_;
};

// Filesystem failures. The CLI maps these to exit code 2.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace genderation

#endif  // GENDERATION_ERRORS_H_
