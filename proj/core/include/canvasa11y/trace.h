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

#ifndef CANVASA11Y_TRACE_H_
#define CANVASA11Y_TRACE_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "canvasa11y/geometry.h"

namespace canvasa11y {

enum class CommandKind {
  kFillRect,
  kStrokeRect,
  kArc,
  kFillText,
  kStrokeText,
  kSetFont,
  kSetTextAlign,
};

// Wire names: "fillRect", "strokeRect", ...
std::string_view CommandKindName(CommandKind kind);

enum class TextAlign { kLeft, kRight, kCenter, kStart, kEnd };
std::string_view TextAlignName(TextAlign align);

struct RectArgs {
  double x = 0, y = 0, w = 0, h = 0;
  friend bool operator==(const RectArgs&, const RectArgs&) = default;
};
// `fill` distinguishes arc(...); fill() from arc(...); stroke().
struct ArcArgs {
  double cx = 0, cy = 0, radius = 0, start_angle = 0, end_angle = 0;
  bool fill = false;
  friend bool operator==(const ArcArgs&, const ArcArgs&) = default;
};
struct TextArgs {
  std::string text;
  double x = 0, y = 0;
  friend bool operator==(const TextArgs&, const TextArgs&) = default;
};
struct FontArgs {
  std::string font;
  friend bool operator==(const FontArgs&, const FontArgs&) = default;
};
struct AlignArgs {
  TextAlign align = TextAlign::kStart;
  friend bool operator==(const AlignArgs&, const AlignArgs&) = default;
};

struct DrawCommand {
  CommandKind kind;
  long seq = 0;
  std::variant<RectArgs, ArcArgs, TextArgs, FontArgs, AlignArgs> args;

  bool is_text() const {
    return kind == CommandKind::kFillText || kind == CommandKind::kStrokeText;
  }
  // Rect origin, arc centre or text origin, rounded to the pixel grid.
  // State commands (setFont, setTextAlign) have no anchor.
  bool has_anchor() const;
  Point anchor() const;

  friend bool operator==(const DrawCommand&, const DrawCommand&) = default;
};

struct EventBinding {
  std::string event_name;
  bool position_dependent = false;
  std::string handler_ref;

  friend bool operator==(const EventBinding&, const EventBinding&) = default;
};

struct CanvasTrace {
  int canvas_width = 0;
  int canvas_height = 0;
  std::vector<DrawCommand> commands;
  std::vector<EventBinding> bindings;
  std::vector<std::string> warnings;  // skipped commands, not serialised

  // Text alignment in effect for the command at `index`.
  TextAlign AlignmentAt(std::size_t index) const;
};

inline constexpr int kTraceVersion = 1;

// Parses and validates a v1 trace document. Unknown command kinds are
// skipped and recorded in `warnings`. Throws ParseError with the JSON path
// of the offending node.
CanvasTrace ParseTrace(std::string_view json_text);

// Canonical v1 serialisation (sorted keys).
std::string TraceToJson(const CanvasTrace& trace);

inline constexpr int kNearMargin = 5;

// Commands whose anchor lies in `bbox` grown by kNearMargin on each side
// (inclusive), in trace order.
std::vector<DrawCommand> CommandsNear(const CanvasTrace& trace,
                                      const BoundingBox& bbox);

}  // namespace canvasa11y

#endif  // CANVASA11Y_TRACE_H_
