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

#ifndef CANVASA11Y_ANALYSIS_H_
#define CANVASA11Y_ANALYSIS_H_

#include <vector>

#include "canvasa11y/edges.h"
#include "canvasa11y/features.h"
#include "canvasa11y/labeling.h"
#include "canvasa11y/raster.h"

namespace canvasa11y {

// Luma below this is "ink" for the glyph/mark labelling pass.
inline constexpr double kDarkCutoff = 128.0;

// An outline-pass region that is not nested inside another region, with
// the ink components drawn inside it.
struct Candidate {
  Region region;
  std::vector<Region> letters;
  FeatureVector features;
};

struct SceneAnalysis {
  int width = 0;
  int height = 0;
  std::vector<Candidate> candidates;  // in label order
  // Outline regions nested in a candidate's interior.
  std::vector<Region> nested;
};

// Front half of the recognizer: luma, smoothing, Laplacian zero crossings,
// labelling of the edge map and of the dark-pixel map, nesting, features.
SceneAnalysis AnalyzeScene(const PixelBuffer& image,
                           double zero_crossing_threshold);

}  // namespace canvasa11y

#endif  // CANVASA11Y_ANALYSIS_H_
