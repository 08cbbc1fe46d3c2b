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

// Renders widget scene specs into (PNG, trace, expectation) fixture triples.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "canvasa11y/error.h"
#include "canvasa11y/testing/png_writer.h"
#include "canvasa11y/testing/scene.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace canvasa11y;
using namespace canvasa11y::testing;

namespace {

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &size, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < size; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

void WriteFile(const fs::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int WriteRandomSpecs(int count, std::uint32_t seed, const fs::path& dir) {
  fs::create_directories(dir);
  for (int i = 0; i < count; ++i) {
    const SceneSpec spec = RandomSceneSpec(seed, i);
    WriteFile(dir / (spec.name + ".json"), SceneSpecToJson(spec).dump(1) + "\n");
  }
  return 0;
}

int RenderDirectory(const fs::path& specs, const fs::path& out) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(specs)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  fs::create_directories(out);

  json manifest = json::array();
  json annotations = json::array();
  for (const auto& file : files) {
    std::optional<RenderedScene> rendered;
    std::string name;
    try {
      SceneSpec spec = SceneSpecFromJson(json::parse(ReadFile(file)));
      if (spec.name.empty()) spec.name = file.stem().string();
      name = spec.name;
      rendered = RenderScene(spec);
    } catch (const std::exception& e) {
      std::cerr << "fixturegen: " << file.string() << ": " << e.what() << "\n";
      return 1;
    }
    const RenderedScene& scene = *rendered;
    const auto png = EncodePng(scene.image);
    const std::string png_bytes(png.begin(), png.end());
    const std::string trace = scene.trace.dump(1) + "\n";
    const std::string expect = scene.expectation.dump(1) + "\n";
    WriteFile(out / (name + ".png"), png_bytes);
    WriteFile(out / (name + ".trace.json"), trace);
    WriteFile(out / (name + ".expect.json"), expect);
    manifest.push_back({{"name", name},
                        {"png", Sha256Hex(png_bytes)},
                        {"trace", Sha256Hex(trace)},
                        {"expectation", Sha256Hex(expect)}});
    json owned = json::array();
    for (const auto& w : scene.expectation["widgets"]) {
      owned.push_back({{"class", w["class"]}, {"bbox", w["bbox"]}});
    }
    annotations.push_back({{"image", name + ".png"}, {"annotations", owned}});
  }
  WriteFile(out / "manifest.json", json{{"scenes", manifest}}.dump(1) + "\n");
  WriteFile(out / "annotations.json", json{{"scenes", annotations}}.dump(1) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Render canvas widget scenes into test fixtures"};
  app.require_subcommand(1);

  int count = 50;
  std::uint32_t seed = 1;
  std::string specs_dir, out_dir;
  auto* random = app.add_subcommand("random", "write random scene specs");
  random->add_option("--count", count, "number of scenes")->check(CLI::PositiveNumber);
  random->add_option("--seed", seed, "layout seed");
  random->add_option("out", out_dir, "spec directory")->required();

  auto* render = app.add_subcommand("render", "render every spec in a directory");
  render->add_option("specs", specs_dir, "spec directory")->required()->check(CLI::ExistingDirectory);
  render->add_option("out", out_dir, "fixture directory")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*random) return WriteRandomSpecs(count, seed, out_dir);
    return RenderDirectory(specs_dir, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "fixturegen: " << e.what() << "\n";
    return 1;
  }
}
