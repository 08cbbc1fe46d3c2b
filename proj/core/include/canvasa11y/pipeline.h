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

#ifndef CANVASA11Y_PIPELINE_H_
#define CANVASA11Y_PIPELINE_H_

#include <set>
#include <string>
#include <string_view>

#include "canvasa11y/cbir.h"
#include "canvasa11y/document.h"
#include "canvasa11y/edges.h"
#include "canvasa11y/emit.h"
#include "canvasa11y/raster.h"
#include "canvasa11y/trace.h"

namespace canvasa11y {

enum class EmitFormat { kHtml, kJson };

struct PipelineConfig {
  double zero_crossing_threshold = kDefaultZeroCrossingThreshold;
  Norm distance_p = Norm::kL2;
  double rejection_cutoff = kDefaultRejectionCutoff;
  std::string feature_base_path;  // empty: built-in base
  std::set<EmitFormat> emit_formats = {EmitFormat::kHtml, EmitFormat::kJson};

  // Throws ConfigError when a field is out of range.
  void Validate() const;
};

// Overlays the fields present in a JSON config object onto `config`. Keys:
// threshold, p, cutoff, base, emit. Throws ConfigError.
void ApplyConfigJson(std::string_view json_text, PipelineConfig& config);

// The feature base compiled into the library.
const FeatureBase& BuiltinFeatureBase();

// Runs recognition, classification, text placement and binding mapping on
// one canvas snapshot. `trace` may be null. Unrecognised regions end up in
// the diagnostics; this never throws for recognition failures.
AccessibleDocument RecognizeCanvas(const PixelBuffer& image,
                                   const CanvasTrace* trace,
                                   const FeatureBase& base,
                                   const PipelineConfig& config);

}  // namespace canvasa11y

#endif  // CANVASA11Y_PIPELINE_H_
