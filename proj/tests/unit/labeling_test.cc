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

#include "canvasa11y/labeling.h"

#include <random>

#include <gtest/gtest.h>

#include "canvasa11y/error.h"
#include "support/oracles.h"

namespace canvasa11y {
namespace {

using FillFn = LabelMap (*)(const BinaryMap&);

class FloodFillTest : public ::testing::TestWithParam<FillFn> {};

TEST_P(FloodFillTest, EmptyMap) {
  const LabelMap m = GetParam()(BinaryMap(8, 8));
  EXPECT_EQ(m.label_count, 0);
  for (int v : m.labels) EXPECT_EQ(v, 0);
}

TEST_P(FloodFillTest, TwoBlocksInScanOrder) {
  BinaryMap b(8, 8);
  for (auto [x, y] : {std::pair{5, 1}, {6, 1}, {5, 2}, {6, 2}, {1, 5}, {2, 5}, {1, 6}, {2, 6}}) {
    b.set(x, y, true);
  }
  const LabelMap m = GetParam()(b);
  EXPECT_EQ(m.label_count, 2);
  EXPECT_EQ(m.at(5, 1), 1);
  EXPECT_EQ(m.at(2, 6), 2);
  EXPECT_EQ(m, oracle::UnionFindLabels(b));
}

TEST_P(FloodFillTest, DiagonalPairIsOneComponent) {
  BinaryMap b(3, 3);
  b.set(0, 0, true);
  b.set(1, 1, true);
  EXPECT_EQ(GetParam()(b).label_count, 1);
}

TEST_P(FloodFillTest, CheckerboardIsOneComponent) {
  BinaryMap b(8, 8);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) b.set(x, y, (x + y) % 2 == 0);
  }
  EXPECT_EQ(GetParam()(b).label_count, 1);
}

TEST_P(FloodFillTest, AllForeground) {
  BinaryMap b(16, 16);
  std::fill(b.data.begin(), b.data.end(), 1);
  const LabelMap m = GetParam()(b);
  EXPECT_EQ(m.label_count, 1);
  for (int v : m.labels) EXPECT_EQ(v, 1);
}

TEST_P(FloodFillTest, SinglePixel) {
  BinaryMap b(5, 5);
  b.set(3, 2, true);
  const LabelMap m = GetParam()(b);
  EXPECT_EQ(m.label_count, 1);
  EXPECT_EQ(m.at(3, 2), 1);
}

TEST_P(FloodFillTest, MatchesUnionFindOnRandomMaps) {
  std::mt19937 rng(1234);
  for (int t = 0; t < 200; ++t) {
    const int w = 1 + rng() % 64, h = 1 + rng() % 64;
    const double density = 0.1 + 0.1 * (t % 7);
    const BinaryMap b = oracle::RandomBinaryMap(rng, w, h, density);
    const LabelMap m = GetParam()(b);
    ASSERT_EQ(m, oracle::UnionFindLabels(b)) << "map " << t << " " << w << "x" << h;
    ASSERT_EQ(m, GetParam()(b)) << "not deterministic";
  }
}

INSTANTIATE_TEST_SUITE_P(Variants, FloodFillTest,
                         ::testing::Values(&FloodFillBfs, &FloodFillDfs, &FloodFillRecursive),
                         [](const auto& info) {
                           return std::string(info.index == 0   ? "Bfs"
                                              : info.index == 1 ? "Dfs"
                                                                : "Recursive");
                         });

TEST(FloodFillRecursiveTest, SizeGuard) {
  EXPECT_NO_THROW(FloodFillRecursive(BinaryMap(64, 64)));
  EXPECT_THROW(FloodFillRecursive(BinaryMap(65, 64)), SizeError);
}

TEST(FloodFillRecursiveTest, WorstCaseDepthWithinGuard) {
  BinaryMap b(64, 64);
  std::fill(b.data.begin(), b.data.end(), 1);
  EXPECT_EQ(FloodFillRecursive(b), FloodFillBfs(b));
}

TEST(FloodFillTest, LargeMapsAgreeBetweenIterativeVariants) {
  std::mt19937 rng(77);
  const BinaryMap b = oracle::RandomBinaryMap(rng, 400, 300, 0.55);
  EXPECT_EQ(FloodFillBfs(b), FloodFillDfs(b));
}

TEST(ExtractRegionsTest, Empty) {
  EXPECT_TRUE(ExtractRegions(FloodFillBfs(BinaryMap(4, 4))).empty());
}

TEST(ExtractRegionsTest, Block) {
  const auto regions = ExtractRegions(FloodFillBfs(oracle::FilledRect(8, 8, 2, 2, 3, 3)));
  ASSERT_EQ(regions.size(), 1u);
  EXPECT_EQ(regions[0].bbox, (BoundingBox{2, 2, 4, 4}));
  EXPECT_EQ(regions[0].pixel_count, 9);
  EXPECT_EQ(regions[0].label, 1);
}

TEST(ExtractRegionsTest, LShape) {
  BinaryMap b(6, 6);
  for (int y = 1; y <= 4; ++y) b.set(1, y, true);
  for (int x = 1; x <= 3; ++x) b.set(x, 4, true);
  const auto regions = ExtractRegions(FloodFillBfs(b));
  ASSERT_EQ(regions.size(), 1u);
  EXPECT_EQ(regions[0].bbox, (BoundingBox{1, 1, 3, 4}));
  EXPECT_EQ(regions[0].pixel_count, 6);
  EXPECT_LT(regions[0].pixel_count, regions[0].bbox.area());
}

TEST(ExtractRegionsTest, ConsistentWithLabelMap) {
  std::mt19937 rng(99);
  for (int t = 0; t < 50; ++t) {
    const BinaryMap b = oracle::RandomBinaryMap(rng, 30, 20, 0.35);
    const LabelMap m = FloodFillBfs(b);
    const auto regions = ExtractRegions(m);
    ASSERT_EQ(static_cast<int>(regions.size()), m.label_count);
    for (const auto& r : regions) {
      long count = 0;
      bool top = false, bottom = false, left = false, right = false;
      for (int y = 0; y < m.height; ++y) {
        for (int x = 0; x < m.width; ++x) {
          const bool in = m.at(x, y) == r.label;
          ASSERT_EQ(in, r.Contains(x, y));
          if (!in) continue;
          ++count;
          top |= y == r.bbox.min_y;
          bottom |= y == r.bbox.max_y;
          left |= x == r.bbox.min_x;
          right |= x == r.bbox.max_x;
        }
      }
      EXPECT_EQ(count, r.pixel_count);
      EXPECT_TRUE(top && bottom && left && right) << "bbox not tight";
    }
  }
}

}  // namespace
}  // namespace canvasa11y
