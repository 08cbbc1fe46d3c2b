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

#ifndef CANVASA11Y_EMIT_H_
#define CANVASA11Y_EMIT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canvasa11y/cbir.h"
#include "canvasa11y/document.h"
#include "canvasa11y/trace.h"

namespace canvasa11y {

inline constexpr double kDefaultRejectionCutoff = 0.35;
// Radio centres within this band (either axis) share one group name.
inline constexpr int kRadioGroupBand = 8;
inline constexpr int kDocumentJsonVersion = 1;

// Numbers nodes 1..n in (min_y, min_x, detection order) order and returns
// them in that order.
std::vector<WidgetNode> AssignTabIndices(std::vector<WidgetNode> nodes);

// Attaches every trace binding to every node. Position-dependent bindings
// carry the node's bbox centre as their replay coordinate.
std::vector<WidgetNode> MapBindings(const CanvasTrace& trace,
                                    std::vector<WidgetNode> nodes);

// Accepts the class when distance <= cutoff, nullopt otherwise.
std::optional<WidgetClass> ClassifyOrReject(const Classification& c,
                                            double cutoff);

// Gives radio nodes in a shared row or column band a common group name.
void AssignRadioGroups(std::vector<WidgetNode>& nodes);

// Input type, ARIA role and default value for a widget class.
std::string_view InputType(WidgetClass c);
std::string_view AriaRole(WidgetClass c);

// Positioned container with one natively focusable <input> per node, a
// <label> per standalone text and the keyboard-navigation script.
// Byte-identical for equal documents.
std::string EmitHtml(const AccessibleDocument& doc);

// Canonical JSON: sorted keys, one line, shortest round-trip numbers.
std::string EmitJson(const AccessibleDocument& doc);

// Inverse of EmitJson. Throws ParseError.
AccessibleDocument ParseDocumentJson(std::string_view text);

}  // namespace canvasa11y

#endif  // CANVASA11Y_EMIT_H_
