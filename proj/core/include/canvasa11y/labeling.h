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

#ifndef CANVASA11Y_LABELING_H_
#define CANVASA11Y_LABELING_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "canvasa11y/edges.h"
#include "canvasa11y/geometry.h"

namespace canvasa11y {

// Connected-component labels: 0 is background, components are numbered
// 1..label_count in order of their first pixel under a row-major scan.
struct LabelMap {
  int at(int x, int y) const {
    return labels[static_cast<std::size_t>(y) * width + x];
  }

  int width = 0;
  int height = 0;
  std::vector<std::int32_t> labels;
  int label_count = 0;

  friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

// A single labelled component with a membership mask over its tight bbox.
struct Region {
  bool Contains(int x, int y) const;  // absolute image coordinates
  bool MaskAt(int dx, int dy) const {  // bbox-relative coordinates
    return mask[static_cast<std::size_t>(dy) * bbox.width() + dx] != 0;
  }

  int label = 0;
  BoundingBox bbox;
  long pixel_count = 0;
  std::vector<std::uint8_t> mask;  // bbox.width() * bbox.height()
};

// Largest input accepted by FloodFillRecursive (pixels).
inline constexpr long kRecursiveFillMaxPixels = 4096;

// 8-connected labelling with an explicit FIFO queue. Production default.
LabelMap FloodFillBfs(const BinaryMap& foreground);

// 8-connected labelling with an explicit LIFO stack.
LabelMap FloodFillDfs(const BinaryMap& foreground);

// 8-connected labelling by plain recursion. Only for tiny inputs: throws
// SizeError when width * height exceeds kRecursiveFillMaxPixels.
LabelMap FloodFillRecursive(const BinaryMap& foreground);

// One Region per label, in label order.
std::vector<Region> ExtractRegions(const LabelMap& labels);

// Builds a Region from an arbitrary mask; used by tests and synthetic
// fixtures. Returns a region with pixel_count 0 when the map is empty.
Region RegionFromMap(const BinaryMap& map, int label = 1);

}  // namespace canvasa11y

#endif  // CANVASA11Y_LABELING_H_
