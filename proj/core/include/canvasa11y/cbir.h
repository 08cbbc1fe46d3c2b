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

#ifndef CANVASA11Y_CBIR_H_
#define CANVASA11Y_CBIR_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "canvasa11y/features.h"
#include "canvasa11y/geometry.h"
#include "canvasa11y/raster.h"

namespace canvasa11y {

// Declaration order is the tie-break order used by Classify.
enum class WidgetClass {
  kTextBox,
  kCheckBoxSelected,
  kCheckBoxUnselected,
  kRadioSelected,
  kRadioUnselected,
  kRectButton,
  kCircButton,
  kLetters,
};

inline constexpr std::array<WidgetClass, 8> kAllWidgetClasses = {
    WidgetClass::kTextBox,          WidgetClass::kCheckBoxSelected,
    WidgetClass::kCheckBoxUnselected, WidgetClass::kRadioSelected,
    WidgetClass::kRadioUnselected,  WidgetClass::kRectButton,
    WidgetClass::kCircButton,       WidgetClass::kLetters,
};

// "TextBox", "CheckBoxSelected", ...
std::string_view WidgetClassName(WidgetClass c);
std::optional<WidgetClass> ParseWidgetClass(std::string_view name);

enum class Norm { kL1, kL2, kLInf };

// "1", "2" or "inf"; nullopt otherwise.
std::optional<Norm> ParseNorm(std::string_view text);
std::string_view NormName(Norm p);

using FeatureScales = std::array<double, FeatureVector::kDimensions>;

inline constexpr FeatureScales kUnitScales = {1, 1, 1, 1, 1, 1, 1, 1, 1};

// Minkowski distance of the per-dimension scaled difference:
// (sum |a_i - b_i|^p / s_i^p)^(1/p), or the max for p = infinity.
// Throws ConfigError when any scale is not strictly positive.
double MinkowskiDistance(const FeatureVector& a, const FeatureVector& b,
                         Norm p, const FeatureScales& scales);

struct FeatureBaseEntry {
  WidgetClass widget_class;
  FeatureVector vector;
  std::string source;  // reference scene the vector came from, may be empty
};

// Reference vectors plus the per-dimension normalisation. Immutable once
// built.
class FeatureBase {
 public:
  // Scales default to the per-dimension max over `entries` (1 where that
  // max is zero).
  explicit FeatureBase(std::vector<FeatureBaseEntry> entries);
  FeatureBase(std::vector<FeatureBaseEntry> entries, FeatureScales scales);

  const std::vector<FeatureBaseEntry>& entries() const { return entries_; }
  const FeatureScales& scales() const { return scales_; }

  // Classes without a single entry, in declaration order.
  std::vector<WidgetClass> MissingClasses() const;
  // Throws CoverageError naming the missing classes.
  void RequireFullCoverage() const;

  static FeatureScales MaxScales(std::span<const FeatureBaseEntry> entries);

 private:
  std::vector<FeatureBaseEntry> entries_;
  FeatureScales scales_;
};

struct Classification {
  WidgetClass widget_class;
  double distance = 0;
  // Best distance among entries of any other class; +inf when the base
  // holds a single class.
  double runner_up_distance = 0;
  std::size_t entry_index = 0;
};

// Nearest neighbour over every entry. Exact ties go to the class declared
// first. Throws ConfigError for an empty base.
Classification Classify(const FeatureVector& query, const FeatureBase& base,
                        Norm p);

// Serialised form: {"version":1,"dimensions":[...],"scales":[...],
// "entries":[{"class":...,"source":...,"vector":[...]}]}
std::string FeatureBaseToJson(const FeatureBase& base);
// Throws ParseError on schema violations.
FeatureBase FeatureBaseFromJson(std::string_view text);

// A widget drawn in a reference scene and the class it represents.
struct ClassAnnotation {
  WidgetClass widget_class;
  BoundingBox bbox;
};

struct ReferenceScene {
  std::string name;
  PixelBuffer image;
  std::vector<ClassAnnotation> annotations;
};

// Runs the recognition front end over every reference scene and pairs each
// candidate region with the annotation whose bbox (grown by 3 px) holds the
// region's centre. Widget annotations must own exactly one region; Letters
// annotations own one entry per glyph region. Throws CoverageError if a class
// is never annotated and FixtureError if regions and annotations disagree.
FeatureBase BuildFeatureBase(std::span<const ReferenceScene> scenes,
                             double zero_crossing_threshold);

}  // namespace canvasa11y

#endif  // CANVASA11Y_CBIR_H_
