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

#ifndef CANVASA11Y_FEATURES_H_
#define CANVASA11Y_FEATURES_H_

#include <array>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "canvasa11y/geometry.h"
#include "canvasa11y/labeling.h"

namespace canvasa11y {

// Tunables for line and corner detection, in pixels.
inline constexpr double kLineResponseThreshold = 4.0;
inline constexpr int kMinLineLength = 4;
inline constexpr int kEqualLengthTolerance = 2;
inline constexpr int kAdjacencyTolerance = 3;
// Interior components at or above this fraction of the widget's filled
// area are not glyph candidates.
inline constexpr double kMaxLetterAreaFraction = 0.25;

enum class Orientation { kHorizontal, kVertical };

struct LineSegment {
  Orientation orientation = Orientation::kHorizontal;
  Point start;
  Point end;
  int length = 0;

  friend bool operator==(const LineSegment&, const LineSegment&) = default;
};

// The nine-dimensional shape descriptor compared by the retrieval stage.
struct FeatureVector {
  static constexpr std::size_t kDimensions = 9;

  double num_lines = 0;
  double num_equal_lines = 0;
  double num_adjacent_equal_lines = 0;
  double num_right_angles = 0;
  double label_count_code = 0;  // 0, 10 or 20
  double square_compliance = 0;
  double circle_compliance = 0;
  double rect_compliance = 0;
  double xy_extent_equality = 0;

  std::array<double, kDimensions> ToArray() const;
  static FeatureVector FromArray(const std::array<double, kDimensions>& v);

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

// Stable dimension names, in ToArray() order. Used as JSON keys.
extern const std::array<std::string_view, FeatureVector::kDimensions>
    kFeatureNames;

// Runs the vertical and horizontal line kernels over the region mask
// (foreground 1, background 0). Pixels scoring >= kLineResponseThreshold
// are line pixels; maximal runs along the kernel's axis of length
// >= kMinLineLength become segments. Coordinates are absolute. Horizontal
// segments come first, each group sorted by position.
std::vector<LineSegment> DetectLines(const Region& region);

// Unordered horizontal/vertical pairs with endpoints within
// kAdjacencyTolerance (Chebyshev).
int CountRightAngles(std::span<const LineSegment> lines);

struct EqualLineCounts {
  int equal = 0;
  int adjacent_equal = 0;
};
EqualLineCounts CountEqualAndAdjacentLines(std::span<const LineSegment> lines);

// Mask of the region's bbox minus the background that can reach the bbox
// border through 4-connected background. Holes count as inside.
std::vector<std::uint8_t> FilledInterior(const Region& region);
long FilledArea(const Region& region);

// Mask pixels that touch exterior background through a 4-neighbour, or sit
// on the bbox border. Thin (1-px) outlines come back unchanged; thick
// bands are reduced to their outer boundary.
Region OuterContour(const Region& region);

enum class AreaModel { kRectangle, kEllipse };

struct AreaEstimate {
  long pixel_count = 0;
  long filled_count = 0;
  double analytic_area = 0;
  AreaModel model = AreaModel::kRectangle;
  double agreement = 0;  // min / max of filled_count and analytic_area
};

// Counts the region twice: once by pixels, once from its bbox with the
// rectangle or ellipse area formula. The ellipse model is used when the
// bbox extents are near-equal and the four bbox corners are outside the
// filled interior.
AreaEstimate RegionArea(const Region& region);

// Keeps the components that can be glyphs or marks drawn on `widget`: bbox
// strictly inside the widget bbox, no pixel shared with the widget mask,
// and fewer than kMaxLetterAreaFraction of the widget's filled area.
std::vector<Region> SelectLetters(const Region& widget,
                                  std::span<const Region> components);

// 0 for no interior label, 10 for exactly one, 20 for more than one.
// `letter_regions` must already be filtered with SelectLetters.
int LabelCountCode(const Region& region, std::span<const Region> letter_regions);

struct Compliance {
  double square = 0;
  double circle = 0;
  double rect = 0;
};

// Area ratios against the square, inscribed-ellipse and rectangle models of
// the bbox, gated by aspect ratio. All three lie in [0, 1].
Compliance ShapeCompliance(const Region& region);

// min(w, h) / max(w, h) of the bbox.
double ExtentEquality(const Region& region);

// Assembles every feature. Lines and corners are measured on the outer
// contour so thick edge bands behave like 1-px outlines.
FeatureVector BuildFeatureVector(const Region& region,
                                 std::span<const Region> letter_regions);

}  // namespace canvasa11y

#endif  // CANVASA11Y_FEATURES_H_
