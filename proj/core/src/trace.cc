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

#include "canvasa11y/trace.h"

#include <cmath>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "canvasa11y/error.h"

namespace canvasa11y {
namespace {

using nlohmann::json;

constexpr std::pair<CommandKind, std::string_view> kKindNames[] = {
    {CommandKind::kFillRect, "fillRect"},
    {CommandKind::kStrokeRect, "strokeRect"},
    {CommandKind::kArc, "arc"},
    {CommandKind::kFillText, "fillText"},
    {CommandKind::kStrokeText, "strokeText"},
    {CommandKind::kSetFont, "setFont"},
    {CommandKind::kSetTextAlign, "setTextAlign"},
};

constexpr std::pair<TextAlign, std::string_view> kAlignNames[] = {
    {TextAlign::kLeft, "left"},     {TextAlign::kRight, "right"},
    {TextAlign::kCenter, "center"}, {TextAlign::kStart, "start"},
    {TextAlign::kEnd, "end"},
};

std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

const json& Field(const json& obj, const std::string& key,
                  const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(Join(path, key), "missing field");
  return *it;
}

double Number(const json& obj, const std::string& key,
              const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_number()) throw ParseError(Join(path, key), "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(Join(path, key), "not finite");
  return d;
}

long Integer(const json& obj, const std::string& key, const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_number_integer()) {
    throw ParseError(Join(path, key), "expected an integer");
  }
  return v.get<long>();
}

std::string String(const json& obj, const std::string& key,
                   const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_string()) throw ParseError(Join(path, key), "expected a string");
  return v.get<std::string>();
}

double Positive(const json& obj, const std::string& key,
                const std::string& path) {
  const double d = Number(obj, key, path);
  if (!(d > 0.0)) throw ParseError(Join(path, key), "must be positive");
  return d;
}

std::optional<CommandKind> KindFromName(std::string_view name) {
  for (const auto& [kind, n] : kKindNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

json NumberJson(double v) {
  // Integral values serialise as integers so traces stay readable.
  if (std::trunc(v) == v && std::abs(v) < 1e15) {
    return static_cast<long>(v);
  }
  return v;
}

}  // namespace

std::string_view CommandKindName(CommandKind kind) {
  for (const auto& [k, n] : kKindNames) {
    if (k == kind) return n;
  }
  return "unknown";
}

std::string_view TextAlignName(TextAlign align) {
  for (const auto& [a, n] : kAlignNames) {
    if (a == align) return n;
  }
  return "start";
}

bool DrawCommand::has_anchor() const {
  return kind != CommandKind::kSetFont && kind != CommandKind::kSetTextAlign;
}

Point DrawCommand::anchor() const {
  auto round = [](double v) { return static_cast<int>(std::lround(v)); };
  if (const auto* r = std::get_if<RectArgs>(&args)) {
    return {round(r->x), round(r->y)};
  }
  if (const auto* a = std::get_if<ArcArgs>(&args)) {
    return {round(a->cx), round(a->cy)};
  }
  if (const auto* t = std::get_if<TextArgs>(&args)) {
    return {round(t->x), round(t->y)};
  }
  return {0, 0};
}

TextAlign CanvasTrace::AlignmentAt(std::size_t index) const {
  TextAlign align = TextAlign::kStart;
  for (std::size_t i = 0; i < index && i < commands.size(); ++i) {
    if (const auto* a = std::get_if<AlignArgs>(&commands[i].args)) {
      align = a->align;
    }
  }
  return align;
}

CanvasTrace ParseTrace(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("", "trace must be a JSON object");

  const long version = Integer(root, "version", "");
  if (version != kTraceVersion) {
    throw ParseError("version", "unsupported trace version " +
                                    std::to_string(version));
  }

  CanvasTrace trace;
  const json& canvas = Field(root, "canvas", "");
  if (!canvas.is_object()) throw ParseError("canvas", "expected an object");
  const long width = Integer(canvas, "width", "canvas");
  const long height = Integer(canvas, "height", "canvas");
  if (width < 1) throw ParseError("canvas.width", "must be at least 1");
  if (height < 1) throw ParseError("canvas.height", "must be at least 1");
  trace.canvas_width = static_cast<int>(width);
  trace.canvas_height = static_cast<int>(height);

  const json& commands = Field(root, "commands", "");
  if (!commands.is_array()) throw ParseError("commands", "expected an array");
  long last_seq = 0;
  bool first = true;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const std::string path = "commands[" + std::to_string(i) + "]";
    const json& c = commands[i];
    if (!c.is_object()) throw ParseError(path, "expected an object");
    const long seq = Integer(c, "seq", path);
    if (!first && seq <= last_seq) {
      throw ParseError(path + ".seq", "seq must increase strictly");
    }
    first = false;
    last_seq = seq;
    const std::string kind_name = String(c, "kind", path);
    const auto kind = KindFromName(kind_name);
    if (!kind) {
      trace.warnings.push_back(path + ": skipped unknown command kind '" +
                               kind_name + "'");
      continue;
    }

    DrawCommand cmd{*kind, seq, {}};
    switch (*kind) {
      case CommandKind::kFillRect:
      case CommandKind::kStrokeRect:
        cmd.args = RectArgs{Number(c, "x", path), Number(c, "y", path),
                            Positive(c, "w", path), Positive(c, "h", path)};
        break;
      case CommandKind::kArc: {
        ArcArgs a{Number(c, "x", path), Number(c, "y", path),
                  Positive(c, "radius", path), Number(c, "startAngle", path),
                  Number(c, "endAngle", path), false};
        if (const auto it = c.find("fill"); it != c.end()) {
          if (!it->is_boolean()) throw ParseError(path + ".fill", "expected a boolean");
          a.fill = it->get<bool>();
        }
        cmd.args = a;
        break;
      }
      case CommandKind::kFillText:
      case CommandKind::kStrokeText:
        cmd.args = TextArgs{String(c, "text", path), Number(c, "x", path),
                            Number(c, "y", path)};
        break;
      case CommandKind::kSetFont:
        cmd.args = FontArgs{String(c, "font", path)};
        break;
      case CommandKind::kSetTextAlign: {
        const std::string name = String(c, "align", path);
        std::optional<TextAlign> align;
        for (const auto& [a, n] : kAlignNames) {
          if (n == name) align = a;
        }
        if (!align) {
          throw ParseError(path + ".align", "unknown alignment '" + name + "'");
        }
        cmd.args = AlignArgs{*align};
        break;
      }
    }
    trace.commands.push_back(std::move(cmd));
  }

  if (const auto it = root.find("bindings"); it != root.end()) {
    if (!it->is_array()) throw ParseError("bindings", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "bindings[" + std::to_string(i) + "]";
      const json& b = (*it)[i];
      if (!b.is_object()) throw ParseError(path, "expected an object");
      EventBinding binding;
      binding.event_name = String(b, "event", path);
      if (binding.event_name.empty()) {
        throw ParseError(path + ".event", "must not be empty");
      }
      const json& dep = Field(b, "positionDependent", path);
      if (!dep.is_boolean()) {
        throw ParseError(path + ".positionDependent", "expected a boolean");
      }
      binding.position_dependent = dep.get<bool>();
      binding.handler_ref = String(b, "handler", path);
      trace.bindings.push_back(std::move(binding));
    }
  }
  return trace;
}

std::string TraceToJson(const CanvasTrace& trace) {
  json commands = json::array();
  for (const auto& cmd : trace.commands) {
    json c = {{"seq", cmd.seq}, {"kind", std::string(CommandKindName(cmd.kind))}};
    std::visit(
        [&c](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, RectArgs>) {
            c["x"] = NumberJson(a.x);
            c["y"] = NumberJson(a.y);
            c["w"] = NumberJson(a.w);
            c["h"] = NumberJson(a.h);
          } else if constexpr (std::is_same_v<T, ArcArgs>) {
            c["x"] = NumberJson(a.cx);
            c["y"] = NumberJson(a.cy);
            c["radius"] = NumberJson(a.radius);
            c["startAngle"] = NumberJson(a.start_angle);
            c["endAngle"] = NumberJson(a.end_angle);
            c["fill"] = a.fill;
          } else if constexpr (std::is_same_v<T, TextArgs>) {
            c["text"] = a.text;
            c["x"] = NumberJson(a.x);
            c["y"] = NumberJson(a.y);
          } else if constexpr (std::is_same_v<T, FontArgs>) {
            c["font"] = a.font;
          } else {
            c["align"] = std::string(TextAlignName(a.align));
          }
        },
        cmd.args);
    commands.push_back(std::move(c));
  }
  json bindings = json::array();
  for (const auto& b : trace.bindings) {
    bindings.push_back({{"event", b.event_name},
                        {"positionDependent", b.position_dependent},
                        {"handler", b.handler_ref}});
  }
  const json root = {
      {"version", kTraceVersion},
      {"canvas", {{"width", trace.canvas_width}, {"height", trace.canvas_height}}},
      {"commands", std::move(commands)},
      {"bindings", std::move(bindings)}};
  return root.dump();
}

std::vector<DrawCommand> CommandsNear(const CanvasTrace& trace,
                                      const BoundingBox& bbox) {
  const BoundingBox zone = bbox.Expanded(kNearMargin);
  std::vector<DrawCommand> out;
  for (const auto& cmd : trace.commands) {
    if (cmd.has_anchor() && zone.Contains(cmd.anchor())) out.push_back(cmd);
  }
  return out;
}

}  // namespace canvasa11y
