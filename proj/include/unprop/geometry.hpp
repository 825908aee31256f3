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
#include <optional>
#include <string>
#include <vector>

namespace unprop {

/// Axis-aligned rectangle in absolute pixel coordinates; (x, y) is the
/// top-left corner.
struct Rect {
  int x = 0;
  int y = 0;
  int w = 1;
  int h = 1;

  int right() const noexcept { return x + w; }
  int bottom() const noexcept { return y + h; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

inline std::int64_t rect_area(const Rect& r) noexcept {
  return static_cast<std::int64_t>(r.w) * static_cast<std::int64_t>(r.h);
}

/// Which axis a cut runs along. A vertical cut divides the width, a
/// horizontal cut divides the height.
enum class SplitDirection { kVertical, kHorizontal };

/// A set of rectangles meant to tile an image_width x image_height image
/// exactly. Construction does not validate; see validate_partition.
struct Partition {
  int image_width = 0;
  int image_height = 0;
  std::vector<Rect> rects;

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct PartitionViolation {
  enum class Kind { kEmptyImage, kDegenerateRect, kOutOfBounds, kOverlap, kGap };

  Kind kind;
  /// Offending rect index; for overlaps, the rect that claimed the pixel first.
  std::size_t rect = 0;
  /// Second rect of an overlapping pair.
  std::size_t other = 0;
  /// First failing pixel (overlap or gap), in raster order.
  int x = 0;
  int y = 0;

  std::string describe() const;
};

/// Checks that the rects tile the image exactly. Returns nullopt when the
/// partition is valid; otherwise reports the first problem found. Rect
/// geometry is checked before coverage, and coverage is scanned rect by
/// rect then in raster order.
std::optional<PartitionViolation> validate_partition(const Partition& p);

/// Per-pixel count of how many rects claim each pixel (row-major). Rects
/// are clipped to the image.
std::vector<std::uint16_t> coverage_raster(const Partition& p);

/// Bijection on {0..n-1}. Content of rect j is moved to rect mapping[j].
struct Permutation {
  std::vector<std::size_t> mapping;

  static Permutation identity(std::size_t n);
  std::size_t size() const noexcept { return mapping.size(); }
  bool is_bijection() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

}  // namespace unprop
