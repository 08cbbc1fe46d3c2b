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

#ifndef CANVASA11Y_PNG_H_
#define CANVASA11Y_PNG_H_

#include <cstdint>
#include <filesystem>
#include <span>

#include "canvasa11y/raster.h"

namespace canvasa11y {

// Decodes an 8-bit, non-interlaced PNG stream (greyscale, RGB, palette,
// grey+alpha or RGBA) into RGBA. Images without alpha come back opaque.
// Throws DecodeError carrying the byte offset of the failure.
PixelBuffer DecodePng(std::span<const std::uint8_t> bytes);

// Reads and decodes a PNG file. Missing or unreadable files throw
// std::filesystem::filesystem_error.
PixelBuffer ReadPngFile(const std::filesystem::path& path);

}  // namespace canvasa11y

#endif  // CANVASA11Y_PNG_H_
