// Copyright 2026 The canvasa11y Authors
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

#ifndef CANVASA11Y_ERROR_H_
#define CANVASA11Y_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "canvasa11y/geometry.h"

namespace canvasa11y {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported encoded image. `offset` is the byte position in
// the input stream where decoding failed.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A pixel rectangle that does not fit inside the source buffer.
class BoundsError : public Error {
 public:
  explicit BoundsError(const Rect& rect);
  const Rect& rect() const { return rect_; }

 private:
  Rect rect_;
};

// Input too large for an algorithm with a hard size guard.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Trace, annotation or document JSON that violates its schema. `path` names
// the offending node, e.g. "commands[0].w".
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Invalid tunables, empty or incomplete feature base.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// The feature base does not cover every widget class.
class CoverageError : public ConfigError {
 public:
  explicit CoverageError(std::vector<std::string> missing);
  const std::vector<std::string>& missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

// Reference scene whose regions cannot be paired with its annotations.
class FixtureError : public Error {
 public:
  using Error::Error;
};

}  // namespace canvasa11y

#endif  // CANVASA11Y_ERROR_H_
