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

// canvasa11y: turns a canvas snapshot (PNG plus optional draw-command trace)
// into an accessible HTML/JSON document.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "canvasa11y/cbir.h"
#include "canvasa11y/emit.h"
#include "canvasa11y/error.h"
#include "canvasa11y/pipeline.h"
#include "canvasa11y/png.h"
#include "canvasa11y/trace.h"

namespace fs = std::filesystem;
using namespace canvasa11y;

namespace {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kImageError = 2,
  kTraceError = 3,
  kBaseError = 4,
};

// Thrown to leave main with a specific status after printing a diagnostic.
struct Exit {
  int code;
  std::string message;
};

std::string ReadText(const fs::path& path, int code, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{code, "cannot read " + std::string(what) + " " + path.string()};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Exit{kUsage, "cannot write " + path.string()};
}

PixelBuffer LoadImage(const fs::path& path) {
  try {
    return ReadPngFile(path);
  } catch (const DecodeError& e) {
    throw Exit{kImageError, path.string() + ": byte " + std::to_string(e.offset()) +
                                ": " + e.what()};
  } catch (const std::exception& e) {
    throw Exit{kImageError, path.string() + ": " + e.what()};
  }
}

FeatureBase LoadBase(const std::string& path) {
  try {
    if (path.empty()) return BuiltinFeatureBase();
    FeatureBase base = FeatureBaseFromJson(ReadText(path, kBaseError, "feature base"));
    base.RequireFullCoverage();
    return base;
  } catch (const Exit&) {
    throw;
  } catch (const std::exception& e) {
    throw Exit{kBaseError, "feature base: " + std::string(e.what())};
  }
}

int BuildBase(const fs::path& dir, const fs::path& annotations_path,
              const fs::path& out_dir, double threshold) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(ReadText(annotations_path, kUsage, "annotations"));
  } catch (const json::exception& e) {
    throw Exit{kUsage, annotations_path.string() + ": " + e.what()};
  }
  std::vector<ReferenceScene> scenes;
  try {
    for (const auto& s : root.at("scenes")) {
      const std::string name = s.at("image").get<std::string>();
      ReferenceScene scene{name, LoadImage(dir / name), {}};
      for (const auto& a : s.at("annotations")) {
        const auto c = ParseWidgetClass(a.at("class").get<std::string>());
        if (!c) throw Exit{kUsage, scene.name + ": unknown class " + a.at("class").dump()};
        const auto& b = a.at("bbox");
        scene.annotations.push_back(
            {*c, {b.at("min_x").get<int>(), b.at("min_y").get<int>(),
                  b.at("max_x").get<int>(), b.at("max_y").get<int>()}});
      }
      scenes.push_back(std::move(scene));
    }
  } catch (const json::exception& e) {
    throw Exit{kUsage, annotations_path.string() + ": " + e.what()};
  }
  try {
    const FeatureBase base = BuildFeatureBase(scenes, threshold);
    fs::create_directories(out_dir);
    WriteText(out_dir / "feature_base.json", FeatureBaseToJson(base));
  } catch (const CoverageError& e) {
    throw Exit{kBaseError, e.what()};
  } catch (const FixtureError& e) {
    throw Exit{kBaseError, e.what()};
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognise canvas widgets and emit an accessible document"};
  std::string image, trace_path, base_path, out_dir, config_path, emit = "html,json";
  std::string p = "2", build_base_dir, annotations;
  double threshold = kDefaultZeroCrossingThreshold;
  double cutoff = kDefaultRejectionCutoff;

  auto* image_opt = app.add_option("--image", image, "canvas snapshot (PNG)");
  app.add_option("--trace", trace_path, "draw-command trace (JSON)");
  auto* base_opt = app.add_option("--base", base_path, "feature base (JSON); built-in when omitted");
  app.add_option("--out", out_dir, "output directory; defaults to the image's directory");
  auto* emit_opt = app.add_option("--emit", emit, "comma-separated formats: html,json");
  auto* threshold_opt = app.add_option("--threshold", threshold, "zero-crossing threshold");
  auto* p_opt = app.add_option("--p", p, "distance norm: 1, 2 or inf");
  auto* cutoff_opt = app.add_option("--cutoff", cutoff, "rejection cutoff");
  app.add_option("--config", config_path, "JSON config; flags take precedence");
  auto* build_opt = app.add_option("--build-base", build_base_dir, "reference scene directory");
  auto* ann_opt = app.add_option("--annotations", annotations, "reference annotations (JSON)");
  build_opt->needs(ann_opt);
  ann_opt->needs(build_opt);
  image_opt->excludes(build_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    PipelineConfig config;
    if (!config_path.empty()) {
      ApplyConfigJson(ReadText(config_path, kUsage, "config"), config);
    }
    if (*threshold_opt) config.zero_crossing_threshold = threshold;
    if (*cutoff_opt) config.rejection_cutoff = cutoff;
    if (*p_opt) {
      const auto norm = ParseNorm(p);
      if (!norm) throw Exit{kUsage, "--p must be 1, 2 or inf"};
      config.distance_p = *norm;
    }
    if (*base_opt) config.feature_base_path = base_path;
    if (*emit_opt) {
      config.emit_formats.clear();
      std::stringstream ss(emit);
      for (std::string f; std::getline(ss, f, ',');) {
        if (f == "html") {
          config.emit_formats.insert(EmitFormat::kHtml);
        } else if (f == "json") {
          config.emit_formats.insert(EmitFormat::kJson);
        } else {
          throw Exit{kUsage, "--emit accepts html and json"};
        }
      }
    }
    config.Validate();

    if (*build_opt) {
      return BuildBase(build_base_dir, annotations, out_dir.empty() ? "." : out_dir,
                       config.zero_crossing_threshold);
    }
    if (image.empty()) throw Exit{kUsage, "--image is required"};
    if (!fs::exists(image)) throw Exit{kImageError, "no such image: " + image};

    const PixelBuffer pixels = LoadImage(image);
    std::optional<CanvasTrace> trace;
    if (!trace_path.empty()) {
      try {
        trace = ParseTrace(ReadText(trace_path, kTraceError, "trace"));
      } catch (const ParseError& e) {
        throw Exit{kTraceError, trace_path + ": " +
                                    (e.path().empty() ? "" : e.path() + ": ") + e.what()};
      }
    }
    const FeatureBase base = LoadBase(config.feature_base_path);

    const AccessibleDocument doc =
        RecognizeCanvas(pixels, trace ? &*trace : nullptr, base, config);
    const fs::path dir = out_dir.empty() ? fs::path(image).parent_path() : fs::path(out_dir);
    if (!dir.empty()) fs::create_directories(dir);
    const std::string stem = fs::path(image).stem().string();
    if (config.emit_formats.contains(EmitFormat::kHtml)) {
      WriteText(dir / (stem + ".html"), EmitHtml(doc));
    }
    if (config.emit_formats.contains(EmitFormat::kJson)) {
      WriteText(dir / (stem + ".json"), EmitJson(doc));
    }
    return kOk;
  } catch (const Exit& e) {
    std::cerr << "canvasa11y: " << e.message << "\n";
    return e.code;
  } catch (const ConfigError& e) {
    std::cerr << "canvasa11y: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "canvasa11y: " << e.what() << "\n";
    return kUsage;
  }
}
