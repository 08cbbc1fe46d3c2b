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

#include <zlib.h>

#include <array>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "canvasa11y/error.h"

namespace canvasa11y {
namespace {

constexpr std::array<std::uint8_t, 8> kSignature = {0x89, 'P',  'N',  'G',
                                                    0x0D, 0x0A, 0x1A, 0x0A};

enum ColorType : std::uint8_t {
  kGray = 0,
  kRgb = 2,
  kPalette = 3,
  kGrayAlpha = 4,
  kRgba = 6,
};

int SamplesPerPixel(std::uint8_t color_type) {
  switch (color_type) {
    case kGray:
    case kPalette:
      return 1;
    case kGrayAlpha:
      return 2;
    case kRgb:
      return 3;
    case kRgba:
      return 4;
  }
  return 0;
}

std::uint32_t ReadBe32(std::span<const std::uint8_t> b, std::size_t at) {
  return (std::uint32_t{b[at]} << 24) | (std::uint32_t{b[at + 1]} << 16) |
         (std::uint32_t{b[at + 2]} << 8) | std::uint32_t{b[at + 3]};
}

struct Header {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint8_t color_type = 0;
  int channels = 0;
};

std::uint8_t Paeth(int a, int b, int c) {
  const int p = a + b - c;
  const int pa = std::abs(p - a);
  const int pb = std::abs(p - b);
  const int pc = std::abs(p - c);
  if (pa <= pb && pa <= pc) return static_cast<std::uint8_t>(a);
  if (pb <= pc) return static_cast<std::uint8_t>(b);
  return static_cast<std::uint8_t>(c);
}

std::vector<std::uint8_t> Inflate(std::span<const std::uint8_t> compressed,
                                  std::size_t expected, std::size_t offset) {
  std::vector<std::uint8_t> out(expected);
  z_stream zs{};
  if (inflateInit(&zs) != Z_OK) throw DecodeError(offset, "inflateInit failed");
  zs.next_in = const_cast<Bytef*>(compressed.data());
  zs.avail_in = static_cast<uInt>(compressed.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const std::size_t produced = zs.total_out;
  const std::size_t consumed = zs.total_in;
  inflateEnd(&zs);
  if (rc == Z_STREAM_END && produced == expected) return out;
  if (rc == Z_STREAM_END) {
    throw DecodeError(offset, "image data inflates to " +
                                  std::to_string(produced) + " bytes, expected " +
                                  std::to_string(expected));
  }
  if (rc == Z_BUF_ERROR && produced == expected) {
    throw DecodeError(offset, "image data is larger than the declared size");
  }
  throw DecodeError(offset + consumed, "corrupt or truncated zlib stream");
}

void Unfilter(std::vector<std::uint8_t>& raw, const Header& h,
              std::size_t offset) {
  const std::size_t bpp = h.channels;
  const std::size_t stride = h.width * bpp;
  std::vector<std::uint8_t> prev(stride, 0);
  for (std::uint32_t y = 0; y < h.height; ++y) {
    std::uint8_t* line = raw.data() + y * (stride + 1);
    const std::uint8_t filter = line[0];
    std::uint8_t* cur = line + 1;
    for (std::size_t i = 0; i < stride; ++i) {
      const int a = i >= bpp ? cur[i - bpp] : 0;
      const int b = prev[i];
      const int c = i >= bpp ? prev[i - bpp] : 0;
      switch (filter) {
        case 0:
          break;
        case 1:
          cur[i] = static_cast<std::uint8_t>(cur[i] + a);
          break;
        case 2:
          cur[i] = static_cast<std::uint8_t>(cur[i] + b);
          break;
        case 3:
          cur[i] = static_cast<std::uint8_t>(cur[i] + (a + b) / 2);
          break;
        case 4:
          cur[i] = static_cast<std::uint8_t>(cur[i] + Paeth(a, b, c));
          break;
        default:
          throw DecodeError(offset, "unknown filter type " +
                                        std::to_string(filter) + " on row " +
                                        std::to_string(y));
      }
    }
    std::copy_n(cur, stride, prev.begin());
  }
}

}  // namespace

PixelBuffer DecodePng(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kSignature.size()) {
    throw DecodeError(bytes.size(), "stream shorter than the PNG signature");
  }
  for (std::size_t i = 0; i < kSignature.size(); ++i) {
    if (bytes[i] != kSignature[i]) throw DecodeError(i, "bad PNG signature");
  }

  Header header;
  bool have_header = false;
  bool have_end = false;
  std::vector<std::uint8_t> palette;  // RGBA quadruples
  std::vector<std::uint8_t> idat;
  std::size_t first_idat = 0;

  std::size_t pos = kSignature.size();
  while (!have_end) {
    if (pos + 8 > bytes.size()) {
      throw DecodeError(pos, "truncated chunk header");
    }
    const std::uint32_t length = ReadBe32(bytes, pos);
    const std::size_t type_at = pos + 4;
    const std::string type(bytes.begin() + type_at, bytes.begin() + type_at + 4);
    const std::size_t data_at = pos + 8;
    if (length > 0x7fffffffu || data_at + length + 4 > bytes.size()) {
      throw DecodeError(pos, "truncated " + type + " chunk");
    }
    const auto data = bytes.subspan(data_at, length);
    const std::uint32_t stored_crc = ReadBe32(bytes, data_at + length);
    const auto crc = crc32(crc32(0L, Z_NULL, 0), bytes.data() + type_at,
                           static_cast<uInt>(length + 4));
    if (crc != stored_crc) {
      throw DecodeError(data_at + length, "CRC mismatch in " + type + " chunk");
    }

    if (!have_header && type != "IHDR") {
      throw DecodeError(pos, "first chunk must be IHDR, got " + type);
    }
    if (type == "IHDR") {
      if (have_header) throw DecodeError(pos, "duplicate IHDR");
      if (length != 13) throw DecodeError(pos, "IHDR must be 13 bytes");
      header.width = ReadBe32(data, 0);
      header.height = ReadBe32(data, 4);
      const std::uint8_t depth = data[8];
      header.color_type = data[9];
      header.channels = SamplesPerPixel(header.color_type);
      if (header.width == 0 || header.height == 0 ||
          header.width > (1u << 24) || header.height > (1u << 24)) {
        throw DecodeError(data_at, "unsupported image dimensions");
      }
      if (header.channels == 0) {
        throw DecodeError(data_at + 9, "invalid color type " +
                                           std::to_string(header.color_type));
      }
      if (depth != 8) {
        throw DecodeError(data_at + 8, "only 8-bit samples are supported, got " +
                                           std::to_string(depth));
      }
      if (data[10] != 0 || data[11] != 0) {
        throw DecodeError(data_at + 10, "unknown compression or filter method");
      }
      if (data[12] != 0) {
        throw DecodeError(data_at + 12, "interlaced images are not supported");
      }
      have_header = true;
    } else if (type == "PLTE") {
      if (length == 0 || length % 3 != 0 || length / 3 > 256) {
        throw DecodeError(pos, "invalid PLTE length");
      }
      palette.clear();
      for (std::size_t i = 0; i < length; i += 3) {
        palette.insert(palette.end(), {data[i], data[i + 1], data[i + 2], 255});
      }
    } else if (type == "tRNS") {
      if (header.color_type == kPalette) {
        for (std::size_t i = 0; i < length && 4 * i + 3 < palette.size(); ++i) {
          palette[4 * i + 3] = data[i];
        }
      }
    } else if (type == "IDAT") {
      if (idat.empty()) first_idat = data_at;
      idat.insert(idat.end(), data.begin(), data.end());
    } else if (type == "IEND") {
      have_end = true;
    } else if ((type[0] & 0x20) == 0) {
      throw DecodeError(pos, "unknown critical chunk " + type);
    }
    pos = data_at + length + 4;
  }

  if (idat.empty()) throw DecodeError(pos, "no IDAT chunk");
  if (header.color_type == kPalette && palette.empty()) {
    throw DecodeError(first_idat, "palette image without PLTE");
  }

  const std::size_t stride = std::size_t{header.width} * header.channels;
  auto raw = Inflate(idat, (stride + 1) * header.height, first_idat);
  Unfilter(raw, header, first_idat);

  const int w = static_cast<int>(header.width);
  const int h = static_cast<int>(header.height);
  std::vector<std::uint8_t> rgba(static_cast<std::size_t>(w) * h * 4);
  for (int y = 0; y < h; ++y) {
    const std::uint8_t* src = raw.data() + y * (stride + 1) + 1;
    std::uint8_t* dst = rgba.data() + static_cast<std::size_t>(y) * w * 4;
    for (int x = 0; x < w; ++x, dst += 4) {
      switch (header.color_type) {
        case kGray:
          dst[0] = dst[1] = dst[2] = src[x];
          dst[3] = 255;
          break;
        case kGrayAlpha:
          dst[0] = dst[1] = dst[2] = src[2 * x];
          dst[3] = src[2 * x + 1];
          break;
        case kRgb:
          dst[0] = src[3 * x];
          dst[1] = src[3 * x + 1];
          dst[2] = src[3 * x + 2];
          dst[3] = 255;
          break;
        case kRgba:
          std::copy_n(src + 4 * x, 4, dst);
          break;
        case kPalette: {
          const std::size_t index = src[x];
          if (4 * index + 3 >= palette.size()) {
            throw DecodeError(first_idat, "palette index out of range");
          }
          std::copy_n(palette.begin() + 4 * index, 4, dst);
          break;
        }
      }
    }
  }
  return PixelBuffer(w, h, std::move(rgba));
}

PixelBuffer ReadPngFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::filesystem::filesystem_error(
        "cannot open image", path,
        std::make_error_code(std::errc::no_such_file_or_directory));
  }
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return DecodePng(bytes);
}

}  // namespace canvasa11y
