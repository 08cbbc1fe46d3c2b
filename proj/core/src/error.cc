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

#include "canvasa11y/error.h"

#include <sstream>
#include <utility>

namespace canvasa11y {
namespace {

std::string DescribeRect(const Rect& r) {
  std::ostringstream os;
  os << "rectangle (x=" << r.x << ", y=" << r.y << ", w=" << r.width
     << ", h=" << r.height << ") is outside the pixel buffer";
  return os.str();
}

std::string JoinMissing(const std::vector<std::string>& missing) {
  std::string out = "feature base is missing classes:";
  for (const auto& m : missing) out += " " + m;
  return out;
}

}  // namespace

DecodeError::DecodeError(std::size_t offset, const std::string& message)
    : Error("png decode error at byte " + std::to_string(offset) + ": " +
            message),
      offset_(offset) {}

BoundsError::BoundsError(const Rect& rect)
    : Error(DescribeRect(rect)), rect_(rect) {}

ParseError::ParseError(std::string path, const std::string& message)
    : Error((path.empty() ? std::string("<root>") : path) + ": " + message),
      path_(std::move(path)) {}

CoverageError::CoverageError(std::vector<std::string> missing)
    : ConfigError(JoinMissing(missing)), missing_(std::move(missing)) {}

}  // namespace canvasa11y
