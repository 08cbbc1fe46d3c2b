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

#include "canvasa11y/edges.h"

#include <algorithm>
#include <cmath>

#include "canvasa11y/error.h"

namespace canvasa11y {

std::size_t BinaryMap::Count() const {
  return static_cast<std::size_t>(std::count(data.begin(), data.end(), 1));
}

GrayBuffer LogResponse(const GrayBuffer& buf) {
  return Convolve3x3(buf, kLaplacianKernel);
}

EdgeMap ZeroCrossings(const GrayBuffer& response, double threshold) {
  if (!(threshold >= 0.0)) {
    throw ConfigError("zero-crossing threshold must be nonnegative");
  }
  const int w = response.width;
  const int h = response.height;
  EdgeMap edges(w, h);

  // Right and down neighbours only; each crossing pair is seen once.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double v = response.at(x, y);
      if (x + 1 < w) {
        const double r = response.at(x + 1, y);
        if (v * r < 0.0 && std::abs(v - r) > threshold) {
          edges.set(x, y, true);
          edges.set(x + 1, y, true);
        }
      }
      if (y + 1 < h) {
        const double d = response.at(x, y + 1);
        if (v * d < 0.0 && std::abs(v - d) > threshold) {
          edges.set(x, y, true);
          edges.set(x, y + 1, true);
        }
      }
    }
  }

  constexpr int kDx[4] = {1, -1, 0, 0};
  constexpr int kDy[4] = {0, 0, 1, -1};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (response.at(x, y) != 0.0) continue;
      bool pos = false;
      bool neg = false;
      for (int k = 0; k < 4; ++k) {
        const int nx = x + kDx[k];
        const int ny = y + kDy[k];
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
        const double n = response.at(nx, ny);
        pos |= n > 0.0;
        neg |= n < 0.0;
      }
      if (pos && neg) edges.set(x, y, true);
    }
  }
  return edges;
}

BinaryMap BinarizeDark(const GrayBuffer& luma, double cutoff) {
  BinaryMap out(luma.width, luma.height);
  for (std::size_t i = 0; i < luma.data.size(); ++i) {
    out.data[i] = luma.data[i] < cutoff ? 1 : 0;
  }
  return out;
}

}  // namespace canvasa11y
