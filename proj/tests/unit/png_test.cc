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

#include "canvasa11y/png.h"

#include <png.h>

#include <cstring>
#include <random>

#include <gtest/gtest.h>

#include "canvasa11y/error.h"
#include "canvasa11y/testing/png_writer.h"

namespace canvasa11y {
namespace {

// Reference encoder: libpng's full write API, so every colour type,
// interlacing and bit depth can be produced.
struct PngSpec {
  int width = 1;
  int height = 1;
  int color_type = PNG_COLOR_TYPE_RGBA;
  int bit_depth = 8;
  int interlace = PNG_INTERLACE_NONE;
  std::vector<png_color> palette;
  std::vector<png_byte> trns;
  std::vector<std::vector<png_byte>> rows;
};

std::vector<std::uint8_t> Encode(const PngSpec& s) {
  std::vector<std::uint8_t> out;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    ADD_FAILURE() << "libpng failed";
    return {};
  }
  png_set_write_fn(
      png, &out,
      [](png_structp p, png_bytep data, png_size_t n) {
        auto* v = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(p));
        v->insert(v->end(), data, data + n);
      },
      nullptr);
  png_set_IHDR(png, info, s.width, s.height, s.bit_depth, s.color_type, s.interlace,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  if (!s.palette.empty()) {
    png_set_PLTE(png, info, s.palette.data(), static_cast<int>(s.palette.size()));
  }
  if (!s.trns.empty()) {
    png_set_tRNS(png, info, s.trns.data(), static_cast<int>(s.trns.size()), nullptr);
  }
  png_write_info(png, info);
  std::vector<png_bytep> ptrs;
  for (const auto& r : s.rows) ptrs.push_back(const_cast<png_bytep>(r.data()));
  png_write_image(png, ptrs.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

TEST(DecodePngTest, SingleWhitePixel) {
  PngSpec s;
  s.color_type = PNG_COLOR_TYPE_RGB;
  s.rows = {{255, 255, 255}};
  const PixelBuffer b = DecodePng(Encode(s));
  ASSERT_EQ(b.width(), 1);
  ASSERT_EQ(b.height(), 1);
  EXPECT_EQ(b.Pixel(0, 0), (std::array<std::uint8_t, 4>{255, 255, 255, 255}));
}

TEST(DecodePngTest, KnownColours2x2) {
  PngSpec s;
  s.width = s.height = 2;
  s.rows = {{255, 0, 0, 255, 0, 255, 0, 128}, {0, 0, 255, 0, 10, 20, 30, 40}};
  const PixelBuffer b = DecodePng(Encode(s));
  EXPECT_EQ(b.Pixel(0, 0), (std::array<std::uint8_t, 4>{255, 0, 0, 255}));
  EXPECT_EQ(b.Pixel(1, 0), (std::array<std::uint8_t, 4>{0, 255, 0, 128}));
  EXPECT_EQ(b.Pixel(0, 1), (std::array<std::uint8_t, 4>{0, 0, 255, 0}));
  EXPECT_EQ(b.Pixel(1, 1), (std::array<std::uint8_t, 4>{10, 20, 30, 40}));
}

TEST(DecodePngTest, GrayAndGrayAlpha) {
  PngSpec g;
  g.width = 3;
  g.color_type = PNG_COLOR_TYPE_GRAY;
  g.rows = {{0, 100, 255}};
  const PixelBuffer bg = DecodePng(Encode(g));
  EXPECT_EQ(bg.Pixel(1, 0), (std::array<std::uint8_t, 4>{100, 100, 100, 255}));

  PngSpec ga;
  ga.width = 2;
  ga.color_type = PNG_COLOR_TYPE_GRAY_ALPHA;
  ga.rows = {{50, 60, 200, 0}};
  const PixelBuffer bga = DecodePng(Encode(ga));
  EXPECT_EQ(bga.Pixel(0, 0), (std::array<std::uint8_t, 4>{50, 50, 50, 60}));
  EXPECT_EQ(bga.Pixel(1, 0), (std::array<std::uint8_t, 4>{200, 200, 200, 0}));
}

TEST(DecodePngTest, PaletteWithTransparency) {
  PngSpec s;
  s.width = 3;
  s.color_type = PNG_COLOR_TYPE_PALETTE;
  s.palette = {{1, 2, 3}, {40, 50, 60}, {200, 100, 0}};
  s.trns = {0, 128};
  s.rows = {{2, 0, 1}};
  const PixelBuffer b = DecodePng(Encode(s));
  EXPECT_EQ(b.Pixel(0, 0), (std::array<std::uint8_t, 4>{200, 100, 0, 255}));
  EXPECT_EQ(b.Pixel(1, 0), (std::array<std::uint8_t, 4>{1, 2, 3, 0}));
  EXPECT_EQ(b.Pixel(2, 0), (std::array<std::uint8_t, 4>{40, 50, 60, 128}));
}

TEST(DecodePngTest, RandomImagesRoundTripThroughReferenceEncoder) {
  std::mt19937 rng(21);
  for (int t = 0; t < 30; ++t) {
    PixelBuffer img(1 + rng() % 40, 1 + rng() % 40);
    // Mix smooth gradients and noise so every row filter gets exercised.
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        const bool noisy = (t % 3) == 0;
        const auto v = [&](int k) {
          return static_cast<std::uint8_t>(noisy ? rng() : x * 7 + y * 3 + k * 40);
        };
        img.SetPixel(x, y, {v(0), v(1), v(2), static_cast<std::uint8_t>(t % 2 ? 255 : v(3))});
      }
    }
    const auto bytes = testing::EncodePng(img, testing::PngLayout::kRgba);
    ASSERT_EQ(DecodePng(bytes), img) << "case " << t;
  }
}

TEST(DecodePngTest, RejectsEmptyAndBadSignature) {
  EXPECT_THROW(DecodePng({}), DecodeError);
  std::vector<std::uint8_t> junk = {0x89, 'P', 'N', 'X', 0, 0, 0, 0};
  try {
    DecodePng(junk);
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
}

TEST(DecodePngTest, TruncationAndCorruptionNameAnOffset) {
  PngSpec s;
  s.width = s.height = 8;
  s.color_type = PNG_COLOR_TYPE_RGB;
  s.rows.assign(8, std::vector<png_byte>(24, 77));
  const auto good = Encode(s);
  for (std::size_t cut : {good.size() - 1, good.size() / 2, std::size_t{20}}) {
    std::vector<std::uint8_t> truncated(good.begin(), good.begin() + cut);
    EXPECT_THROW(DecodePng(truncated), DecodeError) << "cut at " << cut;
  }
  auto flipped = good;
  flipped[45] ^= 0xff;  // inside the IDAT payload
  try {
    DecodePng(flipped);
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_GT(e.offset(), 8u);
    EXPECT_LE(e.offset(), flipped.size());
  }
}

TEST(DecodePngTest, RejectsUnsupportedVariants) {
  PngSpec deep;
  deep.bit_depth = 16;
  deep.color_type = PNG_COLOR_TYPE_RGB;
  deep.rows = {{0, 1, 0, 2, 0, 3}};
  EXPECT_THROW(DecodePng(Encode(deep)), DecodeError);

  PngSpec interlaced;
  interlaced.width = interlaced.height = 4;
  interlaced.color_type = PNG_COLOR_TYPE_GRAY;
  interlaced.interlace = PNG_INTERLACE_ADAM7;
  interlaced.rows.assign(4, std::vector<png_byte>(4, 9));
  EXPECT_THROW(DecodePng(Encode(interlaced)), DecodeError);
}

TEST(ReadPngFileTest, MissingFileIsFilesystemError) {
  EXPECT_THROW(ReadPngFile("/nonexistent/dir/x.png"), std::filesystem::filesystem_error);
}

}  // namespace
}  // namespace canvasa11y
