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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace unprop {

/// Owned, row-major, interleaved 8-bit image with 1 (gray) or 3 (RGB)
/// channels. Width and height are always at least one pixel.
class Image {
 public:
  /// Zero-filled image.
  Image(int width, int height, int channels);
  /// Takes ownership of `data`, which must hold exactly
  /// width * height * channels samples.
  Image(int width, int height, int channels, std::vector<std::uint8_t> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  std::size_t row_stride() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(channels_);
  }
  std::size_t size() const noexcept { return data_.size(); }

  std::span<std::uint8_t> data() noexcept { return data_; }
  std::span<const std::uint8_t> data() const noexcept { return data_; }

  std::uint8_t* row(int y) noexcept { return data_.data() + static_cast<std::size_t>(y) * row_stride(); }
  const std::uint8_t* row(int y) const noexcept {
    return data_.data() + static_cast<std::size_t>(y) * row_stride();
  }

  std::uint8_t& at(int x, int y, int c) noexcept { return row(y)[x * channels_ + c]; }
  std::uint8_t at(int x, int y, int c) const noexcept { return row(y)[x * channels_ + c]; }

  bool contains(int x, int y) const noexcept { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  int width_;
  int height_;
  int channels_;
  std::vector<std::uint8_t> data_;
};

}  // namespace unprop
