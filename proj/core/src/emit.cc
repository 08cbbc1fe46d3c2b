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

#include "canvasa11y/emit.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "canvasa11y/error.h"

namespace canvasa11y {
namespace {

using nlohmann::json;

constexpr std::string_view kContainerId = "canvas-a11y";

std::string Escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string_view LiveRegionName(LiveRegion r) {
  switch (r) {
    case LiveRegion::kPolite:
      return "polite";
    case LiveRegion::kAssertive:
      return "assertive";
    case LiveRegion::kOff:
      return "off";
  }
  return "polite";
}

std::string NameAttribute(const WidgetNode& node,
                          std::map<std::string_view, int>& counters) {
  if (!node.group.empty()) return node.group;
  const std::string_view type = InputType(node.widget_class);
  const std::string_view stem = type == "text" ? "textbox" : type;
  return std::string(stem) + std::to_string(++counters[stem]);
}

// Node data the keyboard script needs, embedded as JSON.
json ScriptData(const AccessibleDocument& doc) {
  json nodes = json::array();
  for (const auto& n : doc.nodes) {
    json bindings = json::array();
    for (const auto& b : n.bindings) {
      json entry = {{"event", b.binding.event_name},
                    {"handler", b.binding.handler_ref},
                    {"positionDependent", b.binding.position_dependent}};
      if (b.coordinate) {
        entry["x"] = b.coordinate->x;
        entry["y"] = b.coordinate->y;
      }
      bindings.push_back(std::move(entry));
    }
    nodes.push_back({{"id", n.id}, {"tabIndex", n.tab_index},
                     {"bindings", std::move(bindings)}});
  }
  return nodes;
}

constexpr std::string_view kScriptTemplate = R"JS(<script>
(function () {
  var root = document.getElementById("canvas-a11y");
  var nodes = @NODES@;
  var byId = {};
  nodes.forEach(function (n) { byId[n.id] = n; });
  function fire(node, type) {
    node.bindings.forEach(function (b) {
      if (b.event !== type) return;
      var fn = window[b.handler];
      if (typeof fn !== "function") return;
      var ev = { type: type, target: document.getElementById(node.id) };
      if (b.positionDependent) { ev.offsetX = b.x; ev.offsetY = b.y; }
      fn.call(ev.target, ev);
    });
  }
  root.addEventListener("keyup", function (e) {
    var active = document.activeElement;
    var node = active ? byId[active.id] : undefined;
    if (!node) return;
    if (e.key === "Tab" || e.keyCode === 9) {
      fire(node, "focus");
    } else if (e.key === "Enter" || e.key === " " || e.keyCode === 13 || e.keyCode === 32) {
      fire(node, "click");
    }
    fire(node, "keyup");
  });
  nodes.forEach(function (n) {
    var el = document.getElementById(n.id);
    el.addEventListener("click", function () { fire(n, "click"); });
  });
})();
</script>
)JS";

json BoxJson(const BoundingBox& b) {
  return {{"min_x", b.min_x}, {"min_y", b.min_y}, {"max_x", b.max_x},
          {"max_y", b.max_y}};
}

// Strict accessors used by ParseDocumentJson.
std::string Join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

const json& Need(const json& o, const std::string& key, const std::string& path) {
  if (!o.is_object()) throw ParseError(path, "expected an object");
  const auto it = o.find(key);
  if (it == o.end()) throw ParseError(Join(path, key), "missing field");
  return *it;
}

int NeedInt(const json& o, const std::string& key, const std::string& path) {
  const json& v = Need(o, key, path);
  if (!v.is_number_integer()) throw ParseError(Join(path, key), "expected an integer");
  return v.get<int>();
}

std::string NeedString(const json& o, const std::string& key, const std::string& path) {
  const json& v = Need(o, key, path);
  if (!v.is_string()) throw ParseError(Join(path, key), "expected a string");
  return v.get<std::string>();
}

bool NeedBool(const json& o, const std::string& key, const std::string& path) {
  const json& v = Need(o, key, path);
  if (!v.is_boolean()) throw ParseError(Join(path, key), "expected a boolean");
  return v.get<bool>();
}

const json& NeedArray(const json& o, const std::string& key, const std::string& path) {
  const json& v = Need(o, key, path);
  if (!v.is_array()) throw ParseError(Join(path, key), "expected an array");
  return v;
}

BoundingBox BoxFromJson(const json& o, const std::string& path) {
  return {NeedInt(o, "min_x", path), NeedInt(o, "min_y", path),
          NeedInt(o, "max_x", path), NeedInt(o, "max_y", path)};
}

WidgetClass ClassFromJson(const json& o, const std::string& key, const std::string& path) {
  const std::string name = NeedString(o, key, path);
  const auto c = ParseWidgetClass(name);
  if (!c) throw ParseError(Join(path, key), "unknown class '" + name + "'");
  return *c;
}

std::string Indexed(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

}  // namespace

std::vector<WidgetNode> AssignTabIndices(std::vector<WidgetNode> nodes) {
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(nodes[a].bbox.min_y, nodes[a].bbox.min_x) <
           std::tie(nodes[b].bbox.min_y, nodes[b].bbox.min_x);
  });
  std::vector<WidgetNode> out;
  out.reserve(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.push_back(std::move(nodes[order[i]]));
    out.back().tab_index = static_cast<int>(i) + 1;
  }
  return out;
}

std::vector<WidgetNode> MapBindings(const CanvasTrace& trace,
                                    std::vector<WidgetNode> nodes) {
  for (auto& node : nodes) {
    for (const auto& b : trace.bindings) {
      NodeBinding nb{b, std::nullopt};
      if (b.position_dependent) nb.coordinate = node.bbox.center();
      node.bindings.push_back(std::move(nb));
    }
  }
  return nodes;
}

std::optional<WidgetClass> ClassifyOrReject(const Classification& c,
                                            double cutoff) {
  if (c.distance <= cutoff) return c.widget_class;
  return std::nullopt;
}

void AssignRadioGroups(std::vector<WidgetNode>& nodes) {
  std::vector<std::size_t> radios;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const WidgetClass c = nodes[i].widget_class;
    if (c == WidgetClass::kRadioSelected || c == WidgetClass::kRadioUnselected) {
      radios.push_back(i);
    }
  }
  std::vector<std::size_t> parent(radios.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t a = 0; a < radios.size(); ++a) {
    for (std::size_t b = a + 1; b < radios.size(); ++b) {
      const Point pa = nodes[radios[a]].bbox.center();
      const Point pb = nodes[radios[b]].bbox.center();
      if (std::abs(pa.y - pb.y) <= kRadioGroupBand ||
          std::abs(pa.x - pb.x) <= kRadioGroupBand) {
        parent[find(a)] = find(b);
      }
    }
  }
  std::map<std::size_t, std::string> names;
  for (std::size_t a = 0; a < radios.size(); ++a) {
    const std::size_t root = find(a);
    auto it = names.find(root);
    if (it == names.end()) {
      it = names.emplace(root, "radiogroup" + std::to_string(names.size() + 1)).first;
    }
    nodes[radios[a]].group = it->second;
  }
}

std::string_view InputType(WidgetClass c) {
  switch (c) {
    case WidgetClass::kTextBox:
      return "text";
    case WidgetClass::kCheckBoxSelected:
    case WidgetClass::kCheckBoxUnselected:
      return "checkbox";
    case WidgetClass::kRadioSelected:
    case WidgetClass::kRadioUnselected:
      return "radio";
    case WidgetClass::kRectButton:
    case WidgetClass::kCircButton:
      return "button";
    case WidgetClass::kLetters:
      break;
  }
  return "";
}

std::string_view AriaRole(WidgetClass c) {
  return c == WidgetClass::kTextBox ? "textbox" : InputType(c);
}

std::string EmitHtml(const AccessibleDocument& doc) {
  std::ostringstream os;
  os << "<div id=\"" << kContainerId << "\" aria-live=\""
     << LiveRegionName(doc.live_region)
     << "\" style=\"position: relative; width: " << doc.width
     << "px; height: " << doc.height << "px\">\n";

  std::map<std::string_view, int> counters;
  for (const auto& n : doc.nodes) {
    std::string events;
    for (const auto& b : n.bindings) {
      if (!events.empty()) events += ' ';
      events += b.binding.event_name;
    }
    os << "  <input role=\"" << AriaRole(n.widget_class) << "\" value=\""
       << Escape(n.value) << "\" name=\"" << Escape(NameAttribute(n, counters))
       << "\" tabindex=\"" << n.tab_index << "\"";
    if (!n.label.empty()) os << " aria-label=\"" << Escape(n.label) << "\"";
    if (!events.empty()) os << " data-events=\"" << Escape(events) << "\"";
    os << " id=\"" << Escape(n.id) << "\" type=\"" << InputType(n.widget_class)
       << "\"";
    if (IsCheckable(n.widget_class) && n.checked) os << " checked";
    os << " style=\"position: absolute; left:" << n.bbox.min_x
       << "px; top:" << n.bbox.min_y << "px; width:" << n.bbox.width()
       << "px; height:" << n.bbox.height() << "px\" />\n";
  }
  int label_no = 0;
  for (const auto& l : doc.standalone_labels) {
    os << "  <label id=\"label" << ++label_no
       << "\" style=\"position: absolute; left:" << l.text_bbox.min_x
       << "px; top:" << l.text_bbox.min_y << "px\">" << Escape(l.text)
       << "</label>\n";
  }
  os << "</div>\n";

  std::string data = ScriptData(doc).dump();
  for (std::size_t at = data.find("</"); at != std::string::npos;
       at = data.find("</", at + 3)) {
    data.replace(at, 2, "<\\/");
  }
  std::string script(kScriptTemplate);
  script.replace(script.find("@NODES@"), 7, data);
  os << script;
  return os.str();
}

std::string EmitJson(const AccessibleDocument& doc) {
  json nodes = json::array();
  for (const auto& n : doc.nodes) {
    json bindings = json::array();
    for (const auto& b : n.bindings) {
      json coordinate = nullptr;
      if (b.coordinate) coordinate = {{"x", b.coordinate->x}, {"y", b.coordinate->y}};
      bindings.push_back({{"event", b.binding.event_name},
                          {"position_dependent", b.binding.position_dependent},
                          {"handler", b.binding.handler_ref},
                          {"coordinate", std::move(coordinate)}});
    }
    nodes.push_back({{"id", n.id},
                     {"class", std::string(WidgetClassName(n.widget_class))},
                     {"bbox", BoxJson(n.bbox)},
                     {"label", n.label},
                     {"value", n.value},
                     {"tab_index", n.tab_index},
                     {"checked", n.checked},
                     {"group", n.group},
                     {"bindings", std::move(bindings)}});
  }
  json labels = json::array();
  for (const auto& l : doc.standalone_labels) {
    labels.push_back({{"text", l.text},
                      {"origin", {{"x", l.origin.x}, {"y", l.origin.y}}},
                      {"bbox", BoxJson(l.text_bbox)},
                      {"seq", l.seq}});
  }
  json rejected = json::array();
  for (const auto& r : doc.diagnostics.rejected_regions) {
    rejected.push_back({{"bbox", BoxJson(r.bbox)},
                        {"nearest_class", std::string(WidgetClassName(r.nearest))},
                        {"distance", r.distance}});
  }
  json unresolved = json::array();
  for (const auto& b : doc.diagnostics.unresolved_letters) unresolved.push_back(BoxJson(b));
  json clusters = json::array();
  for (const auto& c : doc.diagnostics.letter_clusters) {
    clusters.push_back({{"bbox", BoxJson(c.bbox)}, {"regions", c.regions}});
  }
  const json root = {
      {"version", kDocumentJsonVersion},
      {"width", doc.width},
      {"height", doc.height},
      {"live_region", std::string(LiveRegionName(doc.live_region))},
      {"nodes", std::move(nodes)},
      {"standalone_labels", std::move(labels)},
      {"diagnostics",
       {{"rejected_regions", std::move(rejected)},
        {"unresolved_letters", std::move(unresolved)},
        {"letter_clusters", std::move(clusters)},
        {"warnings", doc.diagnostics.warnings}}}};
  return root.dump() + "\n";
}

AccessibleDocument ParseDocumentJson(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  if (NeedInt(root, "version", "") != kDocumentJsonVersion) {
    throw ParseError("version", "unsupported document version");
  }
  AccessibleDocument doc;
  doc.width = NeedInt(root, "width", "");
  doc.height = NeedInt(root, "height", "");
  const std::string live = NeedString(root, "live_region", "");
  if (live == "polite") {
    doc.live_region = LiveRegion::kPolite;
  } else if (live == "assertive") {
    doc.live_region = LiveRegion::kAssertive;
  } else if (live == "off") {
    doc.live_region = LiveRegion::kOff;
  } else {
    throw ParseError("live_region", "unknown value '" + live + "'");
  }

  const json& nodes = NeedArray(root, "nodes", "");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string p = Indexed("nodes", i);
    const json& n = nodes[i];
    WidgetNode node;
    node.id = NeedString(n, "id", p);
    node.widget_class = ClassFromJson(n, "class", p);
    node.bbox = BoxFromJson(Need(n, "bbox", p), p + ".bbox");
    node.label = NeedString(n, "label", p);
    node.value = NeedString(n, "value", p);
    node.tab_index = NeedInt(n, "tab_index", p);
    node.checked = NeedBool(n, "checked", p);
    node.group = NeedString(n, "group", p);
    const json& bindings = NeedArray(n, "bindings", p);
    for (std::size_t j = 0; j < bindings.size(); ++j) {
      const std::string bp = Indexed(p + ".bindings", j);
      const json& b = bindings[j];
      NodeBinding nb;
      nb.binding.event_name = NeedString(b, "event", bp);
      nb.binding.position_dependent = NeedBool(b, "position_dependent", bp);
      nb.binding.handler_ref = NeedString(b, "handler", bp);
      const json& c = Need(b, "coordinate", bp);
      if (!c.is_null()) {
        nb.coordinate = Point{NeedInt(c, "x", bp + ".coordinate"),
                              NeedInt(c, "y", bp + ".coordinate")};
      }
      node.bindings.push_back(std::move(nb));
    }
    doc.nodes.push_back(std::move(node));
  }

  const json& labels = NeedArray(root, "standalone_labels", "");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string p = Indexed("standalone_labels", i);
    const json& l = labels[i];
    TextAssignment a;
    a.text = NeedString(l, "text", p);
    a.role = TextRole::kLabel;
    const json& o = Need(l, "origin", p);
    a.origin = {NeedInt(o, "x", p + ".origin"), NeedInt(o, "y", p + ".origin")};
    a.text_bbox = BoxFromJson(Need(l, "bbox", p), p + ".bbox");
    a.seq = Need(l, "seq", p).get<long>();
    doc.standalone_labels.push_back(std::move(a));
  }

  const json& diag = Need(root, "diagnostics", "");
  const json& rejected = NeedArray(diag, "rejected_regions", "diagnostics");
  for (std::size_t i = 0; i < rejected.size(); ++i) {
    const std::string p = Indexed("diagnostics.rejected_regions", i);
    const json& d = Need(rejected[i], "distance", p);
    if (!d.is_number()) throw ParseError(p + ".distance", "expected a number");
    doc.diagnostics.rejected_regions.push_back(
        {BoxFromJson(Need(rejected[i], "bbox", p), p + ".bbox"),
         ClassFromJson(rejected[i], "nearest_class", p), d.get<double>()});
  }
  const json& unresolved = NeedArray(diag, "unresolved_letters", "diagnostics");
  for (std::size_t i = 0; i < unresolved.size(); ++i) {
    doc.diagnostics.unresolved_letters.push_back(
        BoxFromJson(unresolved[i], Indexed("diagnostics.unresolved_letters", i)));
  }
  const json& clusters = NeedArray(diag, "letter_clusters", "diagnostics");
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    const std::string p = Indexed("diagnostics.letter_clusters", i);
    doc.diagnostics.letter_clusters.push_back(
        {BoxFromJson(Need(clusters[i], "bbox", p), p + ".bbox"),
         NeedInt(clusters[i], "regions", p)});
  }
  const json& warnings = NeedArray(diag, "warnings", "diagnostics");
  for (std::size_t i = 0; i < warnings.size(); ++i) {
    if (!warnings[i].is_string()) {
      throw ParseError(Indexed("diagnostics.warnings", i), "expected a string");
    }
    doc.diagnostics.warnings.push_back(warnings[i].get<std::string>());
  }
  return doc;
}

}  // namespace canvasa11y
