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

#ifndef CANVASA11Y_DOCUMENT_H_
#define CANVASA11Y_DOCUMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "canvasa11y/cbir.h"
#include "canvasa11y/geometry.h"
#include "canvasa11y/trace.h"

namespace canvasa11y {

// An event handler attached to a replacement element. Position-dependent
// handlers replay at `coordinate`, the element's bbox centre.
struct NodeBinding {
  EventBinding binding;
  std::optional<Point> coordinate;

  friend bool operator==(const NodeBinding&, const NodeBinding&) = default;
};

struct WidgetNode {
  std::string id;
  WidgetClass widget_class = WidgetClass::kTextBox;
  BoundingBox bbox;
  std::string label;
  std::string value;
  int tab_index = 0;
  std::vector<NodeBinding> bindings;
  bool checked = false;
  std::string group;  // radio group name; empty for other classes

  friend bool operator==(const WidgetNode&, const WidgetNode&) = default;
};

enum class TextRole { kValue, kLabel };

struct TextAssignment {
  std::string text;
  std::optional<std::size_t> widget;  // index into the node list
  TextRole role = TextRole::kLabel;
  Point origin;
  BoundingBox text_bbox;
  long seq = 0;

  friend bool operator==(const TextAssignment&, const TextAssignment&) = default;
};

enum class LiveRegion { kPolite, kAssertive, kOff };

struct RejectedRegion {
  BoundingBox bbox;
  WidgetClass nearest;
  double distance = 0;

  friend bool operator==(const RejectedRegion&, const RejectedRegion&) = default;
};

struct LetterCluster {
  BoundingBox bbox;
  int regions = 0;

  friend bool operator==(const LetterCluster&, const LetterCluster&) = default;
};

struct Diagnostics {
  std::vector<RejectedRegion> rejected_regions;
  std::vector<BoundingBox> unresolved_letters;
  std::vector<LetterCluster> letter_clusters;
  std::vector<std::string> warnings;

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

// The accessible replacement for one canvas.
struct AccessibleDocument {
  int width = 0;
  int height = 0;
  std::vector<WidgetNode> nodes;
  std::vector<TextAssignment> standalone_labels;
  LiveRegion live_region = LiveRegion::kPolite;
  Diagnostics diagnostics;

  friend bool operator==(const AccessibleDocument&,
                         const AccessibleDocument&) = default;
};

// True for the Selected/Unselected checkbox and radio variants.
bool IsCheckable(WidgetClass c);
bool IsSelectedVariant(WidgetClass c);

}  // namespace canvasa11y

#endif  // CANVASA11Y_DOCUMENT_H_
