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

#include "canvasa11y/pipeline.h"

#include <algorithm>
#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

#include "canvasa11y/analysis.h"
#include "canvasa11y/error.h"
#include "canvasa11y/textmap.h"

namespace canvasa11y {

// Defined in the generated builtin_feature_base.cc.
extern const char kBuiltinFeatureBaseJson[];

namespace {

using nlohmann::json;

// How far right of a widget a label may start and still name it.
constexpr int kLabelReach = 40;

bool IsButton(WidgetClass c) {
  return c == WidgetClass::kRectButton || c == WidgetClass::kCircButton;
}

std::string DefaultValue(WidgetClass c) {
  if (c == WidgetClass::kTextBox) return "";
  return std::string(InputType(c));
}

std::string Describe(WidgetClass c, int ordinal) {
  std::string kind;
  switch (c) {
    case WidgetClass::kTextBox:
      kind = "Text box";
      break;
    case WidgetClass::kCheckBoxSelected:
    case WidgetClass::kCheckBoxUnselected:
      kind = "Checkbox";
      break;
    case WidgetClass::kRadioSelected:
    case WidgetClass::kRadioUnselected:
      kind = "Radio button";
      break;
    case WidgetClass::kRectButton:
    case WidgetClass::kCircButton:
      kind = "Button";
      break;
    case WidgetClass::kLetters:
      kind = "Text";
      break;
  }
  return kind + " " + std::to_string(ordinal);
}

bool RowsOverlap(const BoundingBox& a, const BoundingBox& b) {
  return a.min_y <= b.max_y && b.min_y <= a.max_y;
}

// A standalone label just right of a widget on the same row names it.
const TextAssignment* AdjacentLabel(const WidgetNode& node,
                                    const std::vector<TextAssignment>& labels) {
  const TextAssignment* best = nullptr;
  int best_gap = kLabelReach + 1;
  for (const auto& l : labels) {
    if (!RowsOverlap(node.bbox, l.text_bbox)) continue;
    const int gap = l.text_bbox.min_x - node.bbox.max_x;
    if (gap >= 0 && gap < best_gap) {
      best = &l;
      best_gap = gap;
    }
  }
  return best;
}

BoundingBox Inset(const BoundingBox& b) {
  if (b.width() <= 2 || b.height() <= 2) return b;
  return {b.min_x + 1, b.min_y + 1, b.max_x - 1, b.max_y - 1};
}

double NumberField(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config '" + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

void PipelineConfig::Validate() const {
  if (!(zero_crossing_threshold >= 0) || !std::isfinite(zero_crossing_threshold)) {
    throw ConfigError("threshold must be a finite nonnegative number");
  }
  if (!(rejection_cutoff > 0) || !std::isfinite(rejection_cutoff)) {
    throw ConfigError("cutoff must be a finite positive number");
  }
  if (emit_formats.empty()) throw ConfigError("emit formats must be nonempty");
}

void ApplyConfigJson(std::string_view json_text, PipelineConfig& config) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (key == "threshold") {
      config.zero_crossing_threshold = NumberField(value, key);
    } else if (key == "cutoff") {
      config.rejection_cutoff = NumberField(value, key);
    } else if (key == "p") {
      const std::string p =
          value.is_string() ? value.get<std::string>() : value.dump();
      const auto norm = ParseNorm(p);
      if (!norm) throw ConfigError("config 'p' must be 1, 2 or inf");
      config.distance_p = *norm;
    } else if (key == "base") {
      if (!value.is_string()) throw ConfigError("config 'base' must be a string");
      config.feature_base_path = value.get<std::string>();
    } else if (key == "emit") {
      if (!value.is_array()) throw ConfigError("config 'emit' must be an array");
      std::set<EmitFormat> formats;
      for (const auto& f : value) {
        if (f == "html") {
          formats.insert(EmitFormat::kHtml);
        } else if (f == "json") {
          formats.insert(EmitFormat::kJson);
        } else {
          throw ConfigError("config 'emit' entries must be html or json");
        }
      }
      config.emit_formats = std::move(formats);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  config.Validate();
}

const FeatureBase& BuiltinFeatureBase() {
  static const FeatureBase base = [] {
    FeatureBase b = FeatureBaseFromJson(kBuiltinFeatureBaseJson);
    b.RequireFullCoverage();
    return b;
  }();
  return base;
}

AccessibleDocument RecognizeCanvas(const PixelBuffer& image,
                                   const CanvasTrace* trace,
                                   const FeatureBase& base,
                                   const PipelineConfig& config) {
  config.Validate();
  const SceneAnalysis scene = AnalyzeScene(image, config.zero_crossing_threshold);

  AccessibleDocument doc;
  doc.width = image.width();
  doc.height = image.height();

  std::vector<WidgetNode> nodes;
  std::vector<Region> letters;
  for (const auto& c : scene.candidates) {
    const Classification k = Classify(c.features, base, config.distance_p);
    const auto accepted = ClassifyOrReject(k, config.rejection_cutoff);
    if (!accepted) {
      doc.diagnostics.rejected_regions.push_back(
          {c.region.bbox, k.widget_class, k.distance});
      continue;
    }
    if (*accepted == WidgetClass::kLetters) {
      letters.push_back(c.region);
      continue;
    }
    if (IsButton(*accepted)) {
      letters.insert(letters.end(), c.letters.begin(), c.letters.end());
    }
    WidgetNode node;
    node.widget_class = *accepted;
    node.bbox = Inset(c.region.bbox);
    node.checked = IsCheckable(*accepted) && IsSelectedVariant(*accepted);
    node.value = DefaultValue(*accepted);
    nodes.push_back(std::move(node));
  }

  nodes = AssignTabIndices(std::move(nodes));
  std::map<std::string, int> ordinals;
  for (auto& n : nodes) {
    n.id = "elem" + std::to_string(n.tab_index);
    n.label = Describe(n.widget_class,
                       ++ordinals[Describe(n.widget_class, 0)]);
  }
  AssignRadioGroups(nodes);
  doc.diagnostics.letter_clusters = ClusterLetters(letters);

  if (trace != nullptr) {
    const TextResolution text = ResolveText(letters, *trace, nodes);
    for (const auto& a : text.assignments) {
      if (a.role == TextRole::kValue) {
        nodes[*a.widget].value = a.text;
        nodes[*a.widget].label = a.text;
      } else {
        doc.standalone_labels.push_back(a);
      }
    }
    doc.diagnostics.unresolved_letters = text.unresolved_letters;
    for (auto& n : nodes) {
      if (IsButton(n.widget_class) || n.widget_class == WidgetClass::kTextBox) {
        continue;
      }
      if (const auto* l = AdjacentLabel(n, doc.standalone_labels)) n.label = l->text;
    }
    nodes = MapBindings(*trace, std::move(nodes));
    doc.diagnostics.warnings = trace->warnings;
    if (trace->canvas_width != image.width() ||
        trace->canvas_height != image.height()) {
      doc.diagnostics.warnings.push_back(
          "trace canvas size " + std::to_string(trace->canvas_width) + "x" +
          std::to_string(trace->canvas_height) + " differs from image size " +
          std::to_string(image.width()) + "x" + std::to_string(image.height()));
    }
  } else {
    for (const auto& c : doc.diagnostics.letter_clusters) {
      doc.diagnostics.unresolved_letters.push_back(c.bbox);
    }
  }
  doc.nodes = std::move(nodes);
  return doc;
}

}  // namespace canvasa11y
