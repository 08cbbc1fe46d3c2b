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

#include "canvasa11y/analysis.h"

#include <utility>

namespace canvasa11y {
namespace {

Point FirstPixel(const Region& r) {
  const int w = r.bbox.width();
  for (std::size_t i = 0; i < r.mask.size(); ++i) {
    if (r.mask[i]) {
      return {r.bbox.min_x + static_cast<int>(i % w),
              r.bbox.min_y + static_cast<int>(i / w)};
    }
  }
  return {r.bbox.min_x, r.bbox.min_y};
}

// True when `inner` sits in a hole of `outer`. Components are disjoint and
// connected, so testing one pixel decides for the whole component.
bool NestedIn(const Region& inner, const Region& outer,
              const std::vector<std::uint8_t>& outer_filled) {
  if (!outer.bbox.StrictlyContains(inner.bbox)) return false;
  const Point p = FirstPixel(inner);
  const std::size_t i =
      static_cast<std::size_t>(p.y - outer.bbox.min_y) * outer.bbox.width() +
      (p.x - outer.bbox.min_x);
  return outer_filled[i] != 0;
}

}  // namespace

SceneAnalysis AnalyzeScene(const PixelBuffer& image,
                           double zero_crossing_threshold) {
  const GrayBuffer smooth = Denoise(ToGray(image));
  const EdgeMap edges =
      ZeroCrossings(LogResponse(smooth), zero_crossing_threshold);
  std::vector<Region> outlines = ExtractRegions(FloodFillBfs(edges));
  const std::vector<Region> ink =
      ExtractRegions(FloodFillBfs(BinarizeDark(smooth, kDarkCutoff)));

  std::vector<std::vector<std::uint8_t>> filled(outlines.size());
  std::vector<bool> nested(outlines.size(), false);
  for (std::size_t i = 0; i < outlines.size(); ++i) {
    for (std::size_t j = 0; j < outlines.size(); ++j) {
      if (i == j || !outlines[i].bbox.StrictlyContains(outlines[j].bbox)) {
        continue;
      }
      if (filled[i].empty()) filled[i] = FilledInterior(outlines[i]);
      if (NestedIn(outlines[j], outlines[i], filled[i])) nested[j] = true;
    }
  }

  SceneAnalysis out;
  out.width = image.width();
  out.height = image.height();
  for (std::size_t i = 0; i < outlines.size(); ++i) {
    if (nested[i]) {
      out.nested.push_back(std::move(outlines[i]));
      continue;
    }
    Candidate c;
    c.letters = SelectLetters(outlines[i], ink);
    c.features = BuildFeatureVector(outlines[i], c.letters);
    c.region = std::move(outlines[i]);
    out.candidates.push_back(std::move(c));
  }
  return out;
}

}  // namespace canvasa11y
