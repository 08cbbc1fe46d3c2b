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

#include "canvasa11y/cbir.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <nlohmann/json.hpp>

#include "canvasa11y/analysis.h"
#include "canvasa11y/error.h"

namespace canvasa11y {
namespace {

using nlohmann::json;

constexpr std::pair<WidgetClass, std::string_view> kClassNames[] = {
    {WidgetClass::kTextBox, "TextBox"},
    {WidgetClass::kCheckBoxSelected, "CheckBoxSelected"},
    {WidgetClass::kCheckBoxUnselected, "CheckBoxUnselected"},
    {WidgetClass::kRadioSelected, "RadioSelected"},
    {WidgetClass::kRadioUnselected, "RadioUnselected"},
    {WidgetClass::kRectButton, "RectButton"},
    {WidgetClass::kCircButton, "CircButton"},
    {WidgetClass::kLetters, "Letters"},
};

// Annotation boxes are ink boxes; edge regions reach one pixel further.
constexpr int kAnnotationSlack = 3;

void CheckScales(const FeatureScales& scales) {
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0) || !std::isfinite(scales[i])) {
      throw ConfigError("feature scale for " + std::string(kFeatureNames[i]) +
                        " must be positive");
    }
  }
}

std::vector<double> ArrayJson(const std::array<double, 9>& a) {
  return {a.begin(), a.end()};
}

std::array<double, 9> ArrayFromJson(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != FeatureVector::kDimensions) {
    throw ParseError(path, "expected an array of 9 numbers");
  }
  std::array<double, 9> out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!v[i].is_number()) {
      throw ParseError(path + "[" + std::to_string(i) + "]", "expected a number");
    }
    out[i] = v[i].get<double>();
  }
  return out;
}

}  // namespace

std::string_view WidgetClassName(WidgetClass c) {
  for (const auto& [k, n] : kClassNames) {
    if (k == c) return n;
  }
  return "Unknown";
}

std::optional<WidgetClass> ParseWidgetClass(std::string_view name) {
  for (const auto& [k, n] : kClassNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::optional<Norm> ParseNorm(std::string_view text) {
  if (text == "1") return Norm::kL1;
  if (text == "2") return Norm::kL2;
  if (text == "inf" || text == "infinity") return Norm::kLInf;
  return std::nullopt;
}

std::string_view NormName(Norm p) {
  switch (p) {
    case Norm::kL1:
      return "1";
    case Norm::kL2:
      return "2";
    case Norm::kLInf:
      return "inf";
  }
  return "2";
}

double MinkowskiDistance(const FeatureVector& a, const FeatureVector& b,
                         Norm p, const FeatureScales& scales) {
  CheckScales(scales);
  const auto va = a.ToArray();
  const auto vb = b.ToArray();
  std::array<double, FeatureVector::kDimensions> diff{};
  double max = 0.0;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] = std::abs(va[i] - vb[i]) / scales[i];
    max = std::max(max, diff[i]);
  }
  switch (p) {
    case Norm::kL1: {
      double sum = 0.0;
      for (double d : diff) sum += d;
      return sum;
    }
    case Norm::kL2: {
      if (max == 0.0) return 0.0;
      // Scaled by the largest term so the result never drops below it.
      double sum = 0.0;
      for (double d : diff) sum += (d / max) * (d / max);
      return max * std::sqrt(sum);
    }
    case Norm::kLInf:
      return max;
  }
  return max;
}

FeatureBase::FeatureBase(std::vector<FeatureBaseEntry> entries)
    : entries_(std::move(entries)), scales_(MaxScales(entries_)) {}

FeatureBase::FeatureBase(std::vector<FeatureBaseEntry> entries,
                         FeatureScales scales)
    : entries_(std::move(entries)), scales_(scales) {
  CheckScales(scales_);
}

FeatureScales FeatureBase::MaxScales(std::span<const FeatureBaseEntry> entries) {
  FeatureScales scales{};
  for (const auto& e : entries) {
    const auto v = e.vector.ToArray();
    for (std::size_t i = 0; i < v.size(); ++i) {
      scales[i] = std::max(scales[i], std::abs(v[i]));
    }
  }
  for (double& s : scales) {
    if (s == 0.0) s = 1.0;
  }
  return scales;
}

std::vector<WidgetClass> FeatureBase::MissingClasses() const {
  std::vector<WidgetClass> missing;
  for (WidgetClass c : kAllWidgetClasses) {
    const bool present = std::any_of(
        entries_.begin(), entries_.end(),
        [c](const FeatureBaseEntry& e) { return e.widget_class == c; });
    if (!present) missing.push_back(c);
  }
  return missing;
}

void FeatureBase::RequireFullCoverage() const {
  const auto missing = MissingClasses();
  if (missing.empty()) return;
  std::vector<std::string> names;
  for (WidgetClass c : missing) names.emplace_back(WidgetClassName(c));
  throw CoverageError(std::move(names));
}

Classification Classify(const FeatureVector& query, const FeatureBase& base,
                        Norm p) {
  const auto& entries = base.entries();
  if (entries.empty()) throw ConfigError("feature base is empty");

  std::vector<double> dist(entries.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    dist[i] = MinkowskiDistance(query, entries[i].vector, p, base.scales());
    const bool closer = dist[i] < dist[best];
    const bool tie_wins = dist[i] == dist[best] &&
                          entries[i].widget_class < entries[best].widget_class;
    if (closer || tie_wins) best = i;
  }

  Classification c;
  c.widget_class = entries[best].widget_class;
  c.distance = dist[best];
  c.entry_index = best;
  c.runner_up_distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].widget_class != c.widget_class) {
      c.runner_up_distance = std::min(c.runner_up_distance, dist[i]);
    }
  }
  return c;
}

std::string FeatureBaseToJson(const FeatureBase& base) {
  json entries = json::array();
  for (const auto& e : base.entries()) {
    entries.push_back({{"class", std::string(WidgetClassName(e.widget_class))},
                       {"source", e.source},
                       {"vector", ArrayJson(e.vector.ToArray())}});
  }
  json dims = json::array();
  for (auto name : kFeatureNames) dims.push_back(std::string(name));
  const json root = {{"version", 1},
                     {"dimensions", std::move(dims)},
                     {"scales", ArrayJson(base.scales())},
                     {"entries", std::move(entries)}};
  return root.dump(1) + "\n";
}

FeatureBase FeatureBaseFromJson(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("", "expected an object");
  if (root.value("version", 0) != 1) {
    throw ParseError("version", "unsupported feature base version");
  }
  const auto dims = root.find("dimensions");
  if (dims == root.end() || !dims->is_array() ||
      dims->size() != kFeatureNames.size()) {
    throw ParseError("dimensions", "expected the 9 feature names");
  }
  for (std::size_t i = 0; i < kFeatureNames.size(); ++i) {
    if (!(*dims)[i].is_string() || (*dims)[i].get<std::string>() != kFeatureNames[i]) {
      throw ParseError("dimensions[" + std::to_string(i) + "]",
                       "expected " + std::string(kFeatureNames[i]));
    }
  }
  const auto scales_it = root.find("scales");
  if (scales_it == root.end()) throw ParseError("scales", "missing field");
  const FeatureScales scales = ArrayFromJson(*scales_it, "scales");

  const auto entries_it = root.find("entries");
  if (entries_it == root.end() || !entries_it->is_array()) {
    throw ParseError("entries", "expected an array");
  }
  std::vector<FeatureBaseEntry> entries;
  for (std::size_t i = 0; i < entries_it->size(); ++i) {
    const std::string path = "entries[" + std::to_string(i) + "]";
    const json& e = (*entries_it)[i];
    if (!e.is_object()) throw ParseError(path, "expected an object");
    const auto cls_it = e.find("class");
    if (cls_it == e.end() || !cls_it->is_string()) {
      throw ParseError(path + ".class", "expected a class name");
    }
    const auto cls = ParseWidgetClass(cls_it->get<std::string>());
    if (!cls) {
      throw ParseError(path + ".class",
                       "unknown class '" + cls_it->get<std::string>() + "'");
    }
    const auto vec_it = e.find("vector");
    if (vec_it == e.end()) throw ParseError(path + ".vector", "missing field");
    entries.push_back({*cls, FeatureVector::FromArray(ArrayFromJson(*vec_it, path + ".vector")),
                       e.value("source", std::string())});
  }
  try {
    return FeatureBase(std::move(entries), scales);
  } catch (const ConfigError& e) {
    throw ParseError("scales", e.what());
  }
}

FeatureBase BuildFeatureBase(std::span<const ReferenceScene> scenes,
                             double zero_crossing_threshold) {
  std::vector<bool> annotated(kAllWidgetClasses.size(), false);
  for (const auto& scene : scenes) {
    for (const auto& a : scene.annotations) {
      annotated[static_cast<std::size_t>(a.widget_class)] = true;
    }
  }
  std::vector<std::string> missing;
  for (WidgetClass c : kAllWidgetClasses) {
    if (!annotated[static_cast<std::size_t>(c)]) {
      missing.emplace_back(WidgetClassName(c));
    }
  }
  if (!missing.empty()) throw CoverageError(std::move(missing));

  std::vector<FeatureBaseEntry> entries;
  for (const auto& scene : scenes) {
    const SceneAnalysis analysis =
        AnalyzeScene(scene.image, zero_crossing_threshold);
    std::vector<int> owned(scene.annotations.size(), 0);
    for (const auto& cand : analysis.candidates) {
      const Point c = cand.region.bbox.center();
      std::optional<std::size_t> match;
      for (std::size_t i = 0; i < scene.annotations.size(); ++i) {
        if (!scene.annotations[i].bbox.Expanded(kAnnotationSlack).Contains(c)) {
          continue;
        }
        if (match) {
          throw FixtureError(scene.name + ": region centred at (" +
                             std::to_string(c.x) + "," + std::to_string(c.y) +
                             ") matches more than one annotation");
        }
        match = i;
      }
      if (!match) {
        throw FixtureError(scene.name + ": region centred at (" +
                           std::to_string(c.x) + "," + std::to_string(c.y) +
                           ") matches no annotation");
      }
      ++owned[*match];
      entries.push_back({scene.annotations[*match].widget_class, cand.features,
                         scene.name});
    }
    for (std::size_t i = 0; i < scene.annotations.size(); ++i) {
      const auto& a = scene.annotations[i];
      const bool letters = a.widget_class == WidgetClass::kLetters;
      if (owned[i] == 0 || (!letters && owned[i] != 1)) {
        throw FixtureError(scene.name + ": annotation " + std::to_string(i) +
                           " (" + std::string(WidgetClassName(a.widget_class)) +
                           ") owns " + std::to_string(owned[i]) + " regions");
      }
    }
  }
  return FeatureBase(std::move(entries));
}

}  // namespace canvasa11y
