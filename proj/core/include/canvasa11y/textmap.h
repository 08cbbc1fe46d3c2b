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

#ifndef CANVASA11Y_TEXTMAP_H_
#define CANVASA11Y_TEXTMAP_H_

#include <span>
#include <vector>

#include "canvasa11y/document.h"
#include "canvasa11y/labeling.h"
#include "canvasa11y/trace.h"

namespace canvasa11y {

// Glyph regions closer than this (horizontal gap, with vertical overlap)
// belong to the same text run.
inline constexpr int kLetterClusterGap = 16;

// Approximate text box used when no glyph cluster sits at a text origin.
inline constexpr int kApproxGlyphWidth = 7;
inline constexpr int kApproxTextHeight = 12;

// Groups glyph regions into single-line runs. Output sorted by (min_y,
// min_x).
std::vector<LetterCluster> ClusterLetters(std::span<const Region> letters);

struct TextResolution {
  std::vector<TextAssignment> assignments;  // one per text command, seq order
  std::vector<BoundingBox> unresolved_letters;
};

// Pairs every fillText/strokeText command with the glyph cluster within
// kNearMargin of its origin and decides placement: text whose box lies
// inside a widget becomes that widget's value (first by seq wins), anything
// else a standalone label. The string always comes from the trace.
TextResolution ResolveText(std::span<const Region> letter_regions,
                           const CanvasTrace& trace,
                           std::span<const WidgetNode> widgets);

}  // namespace canvasa11y

#endif  // CANVASA11Y_TEXTMAP_H_
