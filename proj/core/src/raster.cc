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

#include "canvasa11y/raster.h"

#include <algorithm>
#include <utility>

#include "canvasa11y/error.h"

namespace canvasa11y {
namespace {

void CheckDimensions(int width, int height) {
  if (width < 1 || height < 1) {
    throw SizeError("pixel buffer dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

PixelBuffer::PixelBuffer(int width, int height)
    : width_(width), height_(height) {
  CheckDimensions(width, height);
  data_.assign(static_cast<std::size_t>(width) * height * kChannels, 0);
}

PixelBuffer::PixelBuffer(int width, int height, std::vector<std::uint8_t> data)
    : width_(width), height_(height), data_(std::move(data)) {
  CheckDimensions(width, height);
  if (data_.size() != static_cast<std::size_t>(width) * height * kChannels) {
    throw SizeError("pixel data holds " + std::to_string(data_.size()) +
                    " bytes, expected width*height*4");
  }
}

void PixelBuffer::SetPixel(int x, int y, std::array<std::uint8_t, 4> rgba) {
  std::copy(rgba.begin(), rgba.end(), data_.begin() + Offset(x, y));
}

std::array<std::uint8_t, 4> PixelBuffer::Pixel(int x, int y) const {
  const std::size_t o = Offset(x, y);
  return {data_[o], data_[o + 1], data_[o + 2], data_[o + 3]};
}

GrayBuffer::GrayBuffer(int w, int h, double fill)
    : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

GrayBuffer::GrayBuffer(int w, int h, std::vector<double> values)
    : width(w), height(h), data(std::move(values)) {
  if (data.size() != static_cast<std::size_t>(w) * h) {
    throw SizeError("gray data length does not match width*height");
  }
}

double GrayBuffer::Clamped(int x, int y) const {
  x = std::clamp(x, 0, width - 1);
  y = std::clamp(y, 0, height - 1);
  return at(x, y);
}

PixelBuffer GetImageData(const PixelBuffer& buf, int x, int y, int w, int h) {
  const bool inside = w >= 1 && h >= 1 && x >= 0 && y >= 0 &&
                      x <= buf.width() - w && y <= buf.height() - h;
  if (!inside) throw BoundsError(Rect{x, y, w, h});

  std::vector<std::uint8_t> out(static_cast<std::size_t>(w) * h *
                                PixelBuffer::kChannels);
  const auto src = buf.data();
  const std::size_t row_bytes = static_cast<std::size_t>(w) * 4;
  for (int row = 0; row < h; ++row) {
    const std::size_t from =
        (static_cast<std::size_t>(y + row) * buf.width() + x) * 4;
    std::copy_n(src.begin() + from, row_bytes,
                out.begin() + static_cast<std::size_t>(row) * row_bytes);
  }
  return PixelBuffer(w, h, std::move(out));
}

GrayBuffer ToGray(const PixelBuffer& buf) {
  GrayBuffer out(buf.width(), buf.height());
  const auto src = buf.data();
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    const double luma = 0.299 * src[4 * i] + 0.587 * src[4 * i + 1] +
                        0.114 * src[4 * i + 2];
    out.data[i] = std::clamp(luma, 0.0, 255.0);
  }
  return out;
}

GrayBuffer Denoise(const GrayBuffer& buf) {
  return Convolve3x3(buf, kGaussianKernel);
}

GrayBuffer Convolve3x3(const GrayBuffer& buf, const Kernel3x3& kernel) {
  GrayBuffer out(buf.width, buf.height);
  for (int y = 0; y < buf.height; ++y) {
    for (int x = 0; x < buf.width; ++x) {
      std::array<double, 9> t;
      for (int ky = -1; ky <= 1; ++ky) {
        for (int kx = -1; kx <= 1; ++kx) {
          const int k = (ky + 1) * 3 + (kx + 1);
          t[k] = kernel[k] * buf.Clamped(x + kx, y + ky);
        }
      }
      // Pairwise order keeps zero-sum kernels exactly zero on flat input.
      out.at(x, y) = (((t[0] + t[1]) + (t[2] + t[3])) +
                      ((t[5] + t[6]) + (t[7] + t[8]))) +
                     t[4];
    }
  }
  return out;
}

}  // namespace canvasa11y
