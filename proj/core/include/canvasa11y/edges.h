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

#ifndef CANVASA11Y_EDGES_H_
#define CANVASA11Y_EDGES_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "canvasa11y/raster.h"

namespace canvasa11y {

// One flag per pixel, row-major. Used both for edge maps and for any other
// foreground/background mask handed to the labeling stage.
struct BinaryMap {
  BinaryMap() = default;
  BinaryMap(int w, int h) : width(w), height(h), data(std::size_t(w) * h, 0) {}

  bool at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x] != 0;
  }
  void set(int x, int y, bool v) {
    data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
  }
  std::size_t Count() const;

  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  friend bool operator==(const BinaryMap&, const BinaryMap&) = default;
};

using EdgeMap = BinaryMap;

inline constexpr double kDefaultZeroCrossingThreshold = 8.0;

// Laplacian response of an (already smoothed) luma buffer.
GrayBuffer LogResponse(const GrayBuffer& buf);

// Marks both pixels of every 4-neighbour pair whose responses have opposite
// signs and differ by more than `threshold`. A pixel whose response is
// exactly zero is marked when it has both a positive and a negative
// 4-neighbour, independent of the threshold.
EdgeMap ZeroCrossings(const GrayBuffer& response, double threshold);

// Foreground = pixels strictly darker than `cutoff`.
BinaryMap BinarizeDark(const GrayBuffer& luma, double cutoff = 128.0);

}  // namespace canvasa11y

#endif  // CANVASA11Y_EDGES_H_
