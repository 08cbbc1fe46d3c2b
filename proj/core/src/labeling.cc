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

#include "canvasa11y/labeling.h"

#include <algorithm>
#include <deque>
#include <vector>

#include "canvasa11y/error.h"

namespace canvasa11y {
namespace {

constexpr int kDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

LabelMap EmptyLabels(const BinaryMap& fg) {
  LabelMap out;
  out.width = fg.width;
  out.height = fg.height;
  out.labels.assign(fg.data.size(), 0);
  return out;
}

bool Unlabelled(const BinaryMap& fg, const LabelMap& lm, int x, int y) {
  if (x < 0 || y < 0 || x >= fg.width || y >= fg.height) return false;
  const std::size_t i = static_cast<std::size_t>(y) * fg.width + x;
  return fg.data[i] != 0 && lm.labels[i] == 0;
}

// One deque serves as the FIFO queue (BFS) or the LIFO stack (DFS).
template <bool kBreadthFirst>
LabelMap IterativeFill(const BinaryMap& fg) {
  LabelMap lm = EmptyLabels(fg);
  std::deque<Point> pending;
  for (int y = 0; y < fg.height; ++y) {
    for (int x = 0; x < fg.width; ++x) {
      if (!Unlabelled(fg, lm, x, y)) continue;
      const int label = ++lm.label_count;
      lm.labels[static_cast<std::size_t>(y) * fg.width + x] = label;
      pending.push_back({x, y});
      while (!pending.empty()) {
        Point p;
        if constexpr (kBreadthFirst) {
          p = pending.front();
          pending.pop_front();
        } else {
          p = pending.back();
          pending.pop_back();
        }
        for (int k = 0; k < 8; ++k) {
          const int nx = p.x + kDx[k];
          const int ny = p.y + kDy[k];
          if (!Unlabelled(fg, lm, nx, ny)) continue;
          lm.labels[static_cast<std::size_t>(ny) * fg.width + nx] = label;
          pending.push_back({nx, ny});
        }
      }
    }
  }
  return lm;
}

void FillFrom(const BinaryMap& fg, LabelMap& lm, int x, int y, int label) {
  lm.labels[static_cast<std::size_t>(y) * fg.width + x] = label;
  for (int k = 0; k < 8; ++k) {
    if (Unlabelled(fg, lm, x + kDx[k], y + kDy[k])) {
      FillFrom(fg, lm, x + kDx[k], y + kDy[k], label);
    }
  }
}

}  // namespace

LabelMap FloodFillBfs(const BinaryMap& foreground) {
  return IterativeFill<true>(foreground);
}

LabelMap FloodFillDfs(const BinaryMap& foreground) {
  return IterativeFill<false>(foreground);
}

LabelMap FloodFillRecursive(const BinaryMap& foreground) {
  const long pixels = static_cast<long>(foreground.width) * foreground.height;
  if (pixels > kRecursiveFillMaxPixels) {
    throw SizeError("recursive flood fill accepts at most " +
                    std::to_string(kRecursiveFillMaxPixels) + " pixels, got " +
                    std::to_string(pixels));
  }
  LabelMap lm = EmptyLabels(foreground);
  for (int y = 0; y < foreground.height; ++y) {
    for (int x = 0; x < foreground.width; ++x) {
      if (Unlabelled(foreground, lm, x, y)) {
        FillFrom(foreground, lm, x, y, ++lm.label_count);
      }
    }
  }
  return lm;
}

bool Region::Contains(int x, int y) const {
  if (!bbox.Contains(Point{x, y})) return false;
  return MaskAt(x - bbox.min_x, y - bbox.min_y);
}

std::vector<Region> ExtractRegions(const LabelMap& lm) {
  std::vector<Region> regions(lm.label_count);
  for (int i = 0; i < lm.label_count; ++i) {
    regions[i].label = i + 1;
    regions[i].bbox = {lm.width, lm.height, -1, -1};
  }
  for (int y = 0; y < lm.height; ++y) {
    for (int x = 0; x < lm.width; ++x) {
      const int l = lm.at(x, y);
      if (l == 0) continue;
      BoundingBox& b = regions[l - 1].bbox;
      b.min_x = std::min(b.min_x, x);
      b.min_y = std::min(b.min_y, y);
      b.max_x = std::max(b.max_x, x);
      b.max_y = std::max(b.max_y, y);
      ++regions[l - 1].pixel_count;
    }
  }
  for (auto& r : regions) {
    r.mask.assign(static_cast<std::size_t>(r.bbox.area()), 0);
  }
  for (int y = 0; y < lm.height; ++y) {
    for (int x = 0; x < lm.width; ++x) {
      const int l = lm.at(x, y);
      if (l == 0) continue;
      Region& r = regions[l - 1];
      r.mask[static_cast<std::size_t>(y - r.bbox.min_y) * r.bbox.width() +
             (x - r.bbox.min_x)] = 1;
    }
  }
  return regions;
}

Region RegionFromMap(const BinaryMap& map, int label) {
  Region r;
  r.label = label;
  r.bbox = {map.width, map.height, -1, -1};
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      if (!map.at(x, y)) continue;
      r.bbox.min_x = std::min(r.bbox.min_x, x);
      r.bbox.min_y = std::min(r.bbox.min_y, y);
      r.bbox.max_x = std::max(r.bbox.max_x, x);
      r.bbox.max_y = std::max(r.bbox.max_y, y);
      ++r.pixel_count;
    }
  }
  if (r.pixel_count == 0) {
    r.bbox = {};
    return r;
  }
  r.mask.assign(static_cast<std::size_t>(r.bbox.area()), 0);
  for (int y = r.bbox.min_y; y <= r.bbox.max_y; ++y) {
    for (int x = r.bbox.min_x; x <= r.bbox.max_x; ++x) {
      if (map.at(x, y)) {
        r.mask[static_cast<std::size_t>(y - r.bbox.min_y) * r.bbox.width() +
               (x - r.bbox.min_x)] = 1;
      }
    }
  }
  return r;
}

}  // namespace canvasa11y
