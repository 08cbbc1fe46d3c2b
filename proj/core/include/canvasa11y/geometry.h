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

#ifndef CANVASA11Y_GEOMETRY_H_
#define CANVASA11Y_GEOMETRY_H_

#include <algorithm>
#include <cstdlib>

namespace canvasa11y {

struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline int ChebyshevDistance(Point a, Point b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

// Origin plus size, as taken by the canvas rectangle APIs.
struct Rect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  friend bool operator==(const Rect&, const Rect&) = default;
};

// Inclusive pixel bounds.
struct BoundingBox {
  int min_x = 0;
  int min_y = 0;
  int max_x = 0;
  int max_y = 0;

  int width() const { return max_x - min_x + 1; }
  int height() const { return max_y - min_y + 1; }
  long area() const { return static_cast<long>(width()) * height(); }
  Point center() const { return {(min_x + max_x) / 2, (min_y + max_y) / 2}; }

  bool Contains(Point p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
  bool Contains(const BoundingBox& o) const {
    return o.min_x >= min_x && o.max_x <= max_x && o.min_y >= min_y &&
           o.max_y <= max_y;
  }
  // True when `o` lies inside without touching any of the four edges.
  bool StrictlyContains(const BoundingBox& o) const {
    return o.min_x > min_x && o.max_x < max_x && o.min_y > min_y &&
           o.max_y < max_y;
  }
  bool Intersects(const BoundingBox& o) const {
    return o.min_x <= max_x && o.max_x >= min_x && o.min_y <= max_y &&
           o.max_y >= min_y;
  }
  BoundingBox Expanded(int margin) const {
    return {min_x - margin, min_y - margin, max_x + margin, max_y + margin};
  }
  BoundingBox Union(const BoundingBox& o) const {
    return {std::min(min_x, o.min_x), std::min(min_y, o.min_y),
            std::max(max_x, o.max_x), std::max(max_y, o.max_y)};
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

}  // namespace canvasa11y

#endif  // CANVASA11Y_GEOMETRY_H_
