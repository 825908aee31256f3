// Copyright 2026 The Unprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "unprop/image.hpp"

namespace unprop {

/// ppm_binary covers P6 (RGB) and P5 (gray) with maxval 255.
enum class ImageFileFormat { kPng, kPpmBinary };

/// Decodes a PNG (8-bit gray or RGB) or binary PGM/PPM, detected from the
/// file's magic bytes. Throws IoError, UnsupportedFormat or MalformedImage.
Image load_image(const std::filesystem::path& path);

/// Throws IoError on failure.
void save_image(const Image& img, const std::filesystem::path& path, ImageFileFormat fmt);

/// In-memory netpbm codec used by the file functions above.
Image decode_netpbm(std::string_view bytes);
std::string encode_netpbm(const Image& img);

/// png / ppm / pgm (case-insensitive, leading dot optional).
std::optional<ImageFileFormat> format_from_extension(std::string_view ext);
/// ".png", or ".ppm" / ".pgm" depending on the channel count.
std::string_view extension_for(ImageFileFormat fmt, int channels);

}  // namespace unprop
