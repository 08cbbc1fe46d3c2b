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

#ifndef CANVASA11Y_RASTER_H_
#define CANVASA11Y_RASTER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "canvasa11y/geometry.h"

namespace canvasa11y {

// RGBA8 raster in row-major order, the shape returned by the canvas
// getImageData() call.
class PixelBuffer {
 public:
  static constexpr int kChannels = 4;

  // Zero-filled (transparent black) buffer. Throws SizeError unless
  // width >= 1 and height >= 1.
  PixelBuffer(int width, int height);
  // Takes ownership of `data`; its length must be width * height * 4.
  PixelBuffer(int width, int height, std::vector<std::uint8_t> data);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const std::uint8_t> data() const { return data_; }
  std::span<std::uint8_t> mutable_data() { return data_; }

  std::uint8_t at(int x, int y, int channel) const {
    return data_[Offset(x, y) + channel];
  }
  void SetPixel(int x, int y, std::array<std::uint8_t, 4> rgba);
  std::array<std::uint8_t, 4> Pixel(int x, int y) const;

  friend bool operator==(const PixelBuffer&, const PixelBuffer&) = default;

 private:
  std::size_t Offset(int x, int y) const {
    return (static_cast<std::size_t>(y) * width_ + x) * kChannels;
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> data_;
};

// Single-channel real-valued raster. Holds luma in [0, 255] or signed
// filter responses.
struct GrayBuffer {
  GrayBuffer() = default;
  GrayBuffer(int w, int h, double fill = 0.0);
  GrayBuffer(int w, int h, std::vector<double> values);

  double at(int x, int y) const {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  double& at(int x, int y) {
    return data[static_cast<std::size_t>(y) * width + x];
  }
  // Edge-replicated read used by every 3x3 filter.
  double Clamped(int x, int y) const;

  int width = 0;
  int height = 0;
  std::vector<double> data;

  friend bool operator==(const GrayBuffer&, const GrayBuffer&) = default;
};

// Row-major 3x3 correlation kernel.
using Kernel3x3 = std::array<double, 9>;

// Discrete Laplacian used for zero-crossing edge detection.
inline constexpr Kernel3x3 kLaplacianKernel = {1, 1, 1, 1, -8, 1, 1, 1, 1};
// Line detectors: respond with 6 on the centre of an ideal 1-px line.
inline constexpr Kernel3x3 kVerticalLineKernel = {-1, 2, -1, -1, 2, -1,
                                                  -1, 2, -1};
inline constexpr Kernel3x3 kHorizontalLineKernel = {-1, -1, -1, 2, 2, 2,
                                                    -1, -1, -1};
// Binomial smoothing kernel, weights sum to one.
inline constexpr Kernel3x3 kGaussianKernel = {
    1.0 / 16, 2.0 / 16, 1.0 / 16, 2.0 / 16, 4.0 / 16,
    2.0 / 16, 1.0 / 16, 2.0 / 16, 1.0 / 16};

// Copies the region [x, x+w) x [y, y+h). Throws BoundsError when the
// rectangle is empty or leaves the buffer; no zero filling.
PixelBuffer GetImageData(const PixelBuffer& buf, int x, int y, int w, int h);

// Rec. 601 luma, alpha ignored.
GrayBuffer ToGray(const PixelBuffer& buf);

// 3x3 binomial smoothing with edge replication.
GrayBuffer Denoise(const GrayBuffer& buf);

// Applies `kernel` as written (correlation, no flip). Borders replicate the
// nearest edge pixel so the output keeps the input dimensions.
GrayBuffer Convolve3x3(const GrayBuffer& buf, const Kernel3x3& kernel);

}  // namespace canvasa11y

#endif  // CANVASA11Y_RASTER_H_
