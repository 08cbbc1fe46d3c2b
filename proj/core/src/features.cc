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

#include "canvasa11y/features.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "canvasa11y/raster.h"

namespace canvasa11y {
namespace {

double Ratio(double a, double b) {
  const double hi = std::max(a, b);
  if (hi <= 0.0) return 1.0;
  return std::min(a, b) / hi;
}

double Clip01(double v) { return std::clamp(v, 0.0, 1.0); }

// Response of `kernel` over the region mask, zero outside the bbox.
double MaskResponse(const Region& r, const Kernel3x3& kernel, int dx, int dy) {
  const int w = r.bbox.width();
  const int h = r.bbox.height();
  double sum = 0.0;
  for (int ky = -1; ky <= 1; ++ky) {
    for (int kx = -1; kx <= 1; ++kx) {
      const int x = dx + kx;
      const int y = dy + ky;
      if (x < 0 || y < 0 || x >= w || y >= h || !r.MaskAt(x, y)) continue;
      sum += kernel[(ky + 1) * 3 + (kx + 1)];
    }
  }
  return sum;
}

bool EndpointsNear(const LineSegment& a, const LineSegment& b, int tolerance) {
  for (Point p : {a.start, a.end}) {
    for (Point q : {b.start, b.end}) {
      if (ChebyshevDistance(p, q) <= tolerance) return true;
    }
  }
  return false;
}

// Marks bbox background reachable from the bbox border (4-connected).
std::vector<std::uint8_t> ExteriorBackground(const Region& r) {
  const int w = r.bbox.width();
  const int h = r.bbox.height();
  std::vector<std::uint8_t> outside(static_cast<std::size_t>(w) * h, 0);
  std::vector<Point> stack;
  auto visit = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= w || y >= h) return;
    const std::size_t i = static_cast<std::size_t>(y) * w + x;
    if (outside[i] || r.mask[i]) return;
    outside[i] = 1;
    stack.push_back({x, y});
  };
  for (int x = 0; x < w; ++x) {
    visit(x, 0);
    visit(x, h - 1);
  }
  for (int y = 0; y < h; ++y) {
    visit(0, y);
    visit(w - 1, y);
  }
  while (!stack.empty()) {
    const Point p = stack.back();
    stack.pop_back();
    visit(p.x + 1, p.y);
    visit(p.x - 1, p.y);
    visit(p.x, p.y + 1);
    visit(p.x, p.y - 1);
  }
  return outside;
}

}  // namespace

const std::array<std::string_view, FeatureVector::kDimensions> kFeatureNames =
    {"num_lines",          "num_equal_lines",   "num_adjacent_equal_lines",
     "num_right_angles",   "label_count_code",  "square_compliance",
     "circle_compliance",  "rect_compliance",   "xy_extent_equality"};

std::array<double, FeatureVector::kDimensions> FeatureVector::ToArray() const {
  return {num_lines,         num_equal_lines,   num_adjacent_equal_lines,
          num_right_angles,  label_count_code,  square_compliance,
          circle_compliance, rect_compliance,   xy_extent_equality};
}

FeatureVector FeatureVector::FromArray(
    const std::array<double, kDimensions>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

std::vector<LineSegment> DetectLines(const Region& region) {
  std::vector<LineSegment> lines;
  if (region.pixel_count == 0) return lines;
  const int w = region.bbox.width();
  const int h = region.bbox.height();
  const int ox = region.bbox.min_x;
  const int oy = region.bbox.min_y;

  for (int y = 0; y < h; ++y) {
    int run = 0;
    for (int x = 0; x <= w; ++x) {
      const bool on = x < w && region.MaskAt(x, y) &&
                      MaskResponse(region, kHorizontalLineKernel, x, y) >=
                          kLineResponseThreshold;
      if (on) {
        ++run;
        continue;
      }
      if (run >= kMinLineLength) {
        lines.push_back({Orientation::kHorizontal,
                         {ox + x - run, oy + y},
                         {ox + x - 1, oy + y},
                         run});
      }
      run = 0;
    }
  }
  for (int x = 0; x < w; ++x) {
    int run = 0;
    for (int y = 0; y <= h; ++y) {
      const bool on = y < h && region.MaskAt(x, y) &&
                      MaskResponse(region, kVerticalLineKernel, x, y) >=
                          kLineResponseThreshold;
      if (on) {
        ++run;
        continue;
      }
      if (run >= kMinLineLength) {
        lines.push_back({Orientation::kVertical,
                         {ox + x, oy + y - run},
                         {ox + x, oy + y - 1},
                         run});
      }
      run = 0;
    }
  }
  return lines;
}

int CountRightAngles(std::span<const LineSegment> lines) {
  int count = 0;
  for (const auto& a : lines) {
    if (a.orientation != Orientation::kHorizontal) continue;
    for (const auto& b : lines) {
      if (b.orientation != Orientation::kVertical) continue;
      if (EndpointsNear(a, b, kAdjacencyTolerance)) ++count;
    }
  }
  return count;
}

EqualLineCounts CountEqualAndAdjacentLines(
    std::span<const LineSegment> lines) {
  EqualLineCounts out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (std::abs(lines[i].length - lines[j].length) > kEqualLengthTolerance) {
        continue;
      }
      ++out.equal;
      if (EndpointsNear(lines[i], lines[j], kAdjacencyTolerance)) {
        ++out.adjacent_equal;
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> FilledInterior(const Region& region) {
  auto filled = ExteriorBackground(region);
  for (auto& v : filled) v = v ? 0 : 1;
  return filled;
}

long FilledArea(const Region& region) {
  if (region.pixel_count == 0) return 0;
  const auto filled = FilledInterior(region);
  return static_cast<long>(std::count(filled.begin(), filled.end(), 1));
}

Region OuterContour(const Region& region) {
  if (region.pixel_count == 0) return region;
  const int w = region.bbox.width();
  const int h = region.bbox.height();
  const auto outside = ExteriorBackground(region);
  auto exterior = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= w || y >= h) return true;
    return outside[static_cast<std::size_t>(y) * w + x] != 0;
  };

  Region contour;
  contour.label = region.label;
  contour.bbox = region.bbox;
  contour.mask.assign(region.mask.size(), 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!region.MaskAt(x, y)) continue;
      if (exterior(x - 1, y) || exterior(x + 1, y) || exterior(x, y - 1) ||
          exterior(x, y + 1)) {
        contour.mask[static_cast<std::size_t>(y) * w + x] = 1;
        ++contour.pixel_count;
      }
    }
  }
  return contour;
}

AreaEstimate RegionArea(const Region& region) {
  AreaEstimate est;
  est.pixel_count = region.pixel_count;
  if (region.pixel_count == 0) return est;
  const auto filled = FilledInterior(region);
  est.filled_count =
      static_cast<long>(std::count(filled.begin(), filled.end(), 1));

  const int w = region.bbox.width();
  const int h = region.bbox.height();
  auto inside = [&](int x, int y) {
    return filled[static_cast<std::size_t>(y) * w + x] != 0;
  };
  const bool corners_empty = !inside(0, 0) && !inside(w - 1, 0) &&
                             !inside(0, h - 1) && !inside(w - 1, h - 1);
  constexpr double kNearEqualExtents = 0.9;
  if (ExtentEquality(region) >= kNearEqualExtents && corners_empty) {
    est.model = AreaModel::kEllipse;
    est.analytic_area = std::numbers::pi * (w / 2.0) * (h / 2.0);
  } else {
    est.model = AreaModel::kRectangle;
    est.analytic_area = static_cast<double>(w) * h;
  }
  est.agreement = Ratio(static_cast<double>(est.filled_count),
                        est.analytic_area);
  return est;
}

std::vector<Region> SelectLetters(const Region& widget,
                                  std::span<const Region> components) {
  std::vector<Region> letters;
  if (widget.pixel_count == 0) return letters;
  const double max_pixels =
      kMaxLetterAreaFraction * static_cast<double>(FilledArea(widget));
  for (const auto& c : components) {
    if (!widget.bbox.StrictlyContains(c.bbox)) continue;
    if (static_cast<double>(c.pixel_count) >= max_pixels) continue;
    bool touches_widget = false;
    for (int y = c.bbox.min_y; y <= c.bbox.max_y && !touches_widget; ++y) {
      for (int x = c.bbox.min_x; x <= c.bbox.max_x; ++x) {
        if (c.Contains(x, y) && widget.Contains(x, y)) {
          touches_widget = true;
          break;
        }
      }
    }
    if (!touches_widget) letters.push_back(c);
  }
  return letters;
}

int LabelCountCode(const Region& region,
                   std::span<const Region> letter_regions) {
  const auto inside = std::count_if(
      letter_regions.begin(), letter_regions.end(), [&](const Region& l) {
        return region.bbox.StrictlyContains(l.bbox);
      });
  if (inside == 0) return 0;
  return inside == 1 ? 10 : 20;
}

Compliance ShapeCompliance(const Region& region) {
  if (region.pixel_count == 0) return {};
  const double w = region.bbox.width();
  const double h = region.bbox.height();
  const double area = static_cast<double>(FilledArea(region));
  const double aspect = Ratio(w, h);
  const double rect_fit = Ratio(area, w * h);
  const double ellipse_fit = Ratio(area, std::numbers::pi * w * h / 4.0);

  Compliance c;
  c.square = Clip01(aspect * rect_fit);
  c.circle = Clip01(aspect * ellipse_fit);
  // Elongation gate: zero for squares, saturating at aspect 1:2.
  c.rect = Clip01(rect_fit * std::min(1.0, 2.0 * (1.0 - aspect)));
  return c;
}

double ExtentEquality(const Region& region) {
  return Ratio(region.bbox.width(), region.bbox.height());
}

FeatureVector BuildFeatureVector(const Region& region,
                                 std::span<const Region> letter_regions) {
  FeatureVector f;
  if (region.pixel_count == 0) return f;
  const auto lines = DetectLines(OuterContour(region));
  const auto equal = CountEqualAndAdjacentLines(lines);
  const auto compliance = ShapeCompliance(region);
  f.num_lines = static_cast<double>(lines.size());
  f.num_equal_lines = equal.equal;
  f.num_adjacent_equal_lines = equal.adjacent_equal;
  f.num_right_angles = CountRightAngles(lines);
  f.label_count_code = LabelCountCode(region, letter_regions);
  f.square_compliance = compliance.square;
  f.circle_compliance = compliance.circle;
  f.rect_compliance = compliance.rect;
  f.xy_extent_equality = ExtentEquality(region);
  return f;
}

}  // namespace canvasa11y
