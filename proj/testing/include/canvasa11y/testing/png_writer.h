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

#ifndef CANVASA11Y_TESTING_PNG_WRITER_H_
#define CANVASA11Y_TESTING_PNG_WRITER_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "canvasa11y/raster.h"

namespace canvasa11y::testing {

enum class PngLayout { kRgba, kRgb, kGray };

// Encodes through libpng, which serves as the reference codec for the
// decoder tests. kRgb drops alpha, kGray keeps the red channel.
std::vector<std::uint8_t> EncodePng(const PixelBuffer& image,
                                    PngLayout layout = PngLayout::kRgba);

void WritePngFile(const std::filesystem::path& path, const PixelBuffer& image);

}  // namespace canvasa11y::testing

#endif  // CANVASA11Y_TESTING_PNG_WRITER_H_
