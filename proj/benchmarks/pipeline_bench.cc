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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <benchmark/benchmark.h>

#include "canvasa11y/edges.h"
#include "canvasa11y/labeling.h"
#include "canvasa11y/pipeline.h"
#include "canvasa11y/png.h"
#include "canvasa11y/raster.h"
#include "canvasa11y/trace.h"

namespace canvasa11y {
namespace {

const std::filesystem::path kCorpus = CANVASA11Y_CORPUS;

BinaryMap RandomMap(int side, double density) {
  std::mt19937 rng(side);
  std::bernoulli_distribution bit(density);
  BinaryMap m(side, side);
  for (auto& v : m.data) v = bit(rng);
  return m;
}

void BM_FloodFillBfs(benchmark::State& state) {
  const BinaryMap m = RandomMap(static_cast<int>(state.range(0)), 0.45);
  for (auto _ : state) benchmark::DoNotOptimize(FloodFillBfs(m));
  state.SetItemsProcessed(state.iterations() * m.data.size());
}
BENCHMARK(BM_FloodFillBfs)->Arg(64)->Arg(256)->Arg(1024);

void BM_FloodFillDfs(benchmark::State& state) {
  const BinaryMap m = RandomMap(static_cast<int>(state.range(0)), 0.45);
  for (auto _ : state) benchmark::DoNotOptimize(FloodFillDfs(m));
  state.SetItemsProcessed(state.iterations() * m.data.size());
}
BENCHMARK(BM_FloodFillDfs)->Arg(64)->Arg(256)->Arg(1024);

void BM_FloodFillRecursive(benchmark::State& state) {
  const BinaryMap m = RandomMap(static_cast<int>(state.range(0)), 0.45);
  for (auto _ : state) benchmark::DoNotOptimize(FloodFillRecursive(m));
  state.SetItemsProcessed(state.iterations() * m.data.size());
}
BENCHMARK(BM_FloodFillRecursive)->Arg(32)->Arg(64);

void BM_Laplacian(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> d(0, 255);
  GrayBuffer g(side, side);
  for (auto& v : g.data) v = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(Convolve3x3(g, kLaplacianKernel));
  state.SetItemsProcessed(state.iterations() * g.data.size());
}
BENCHMARK(BM_Laplacian)->Arg(256)->Arg(1024);

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void BM_RecognizeScene(benchmark::State& state) {
  const std::string name = "scene" + std::to_string(state.range(0));
  const PixelBuffer image = ReadPngFile(kCorpus / (name + ".png"));
  const CanvasTrace trace = ParseTrace(Slurp(kCorpus / (name + ".trace.json")));
  const FeatureBase& base = BuiltinFeatureBase();
  for (auto _ : state) {
    const AccessibleDocument doc = RecognizeCanvas(image, &trace, base, {});
    benchmark::DoNotOptimize(EmitHtml(doc));
  }
}
BENCHMARK(BM_RecognizeScene)->Arg(0)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace canvasa11y

BENCHMARK_MAIN();
