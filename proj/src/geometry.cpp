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

#include "unprop/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace unprop {

std::string PartitionViolation::describe() const {
  const std::string at = " at pixel (" + std::to_string(x) + ", " + std::to_string(y) + ")";
  switch (kind) {
    case Kind::kEmptyImage:
      return "image has no pixels";
    case Kind::kDegenerateRect:
      return "rect " + std::to_string(rect) + " has non-positive extent";
    case Kind::kOutOfBounds:
      return "rect " + std::to_string(rect) + " extends outside the image";
    case Kind::kOverlap:
      return "rects " + std::to_string(rect) + " and " + std::to_string(other) + " overlap" + at;
    case Kind::kGap:
      return "pixel not covered by any rect" + at;
  }
  return "unknown violation";
}

std::vector<std::uint16_t> coverage_raster(const Partition& p) {
  if (p.image_width <= 0 || p.image_height <= 0) return {};
  std::vector<std::uint16_t> counts(static_cast<std::size_t>(p.image_width) * p.image_height, 0);
  for (const Rect& r : p.rects) {
    const int x0 = std::max(r.x, 0);
    const int y0 = std::max(r.y, 0);
    const int x1 = std::min(r.right(), p.image_width);
    const int y1 = std::min(r.bottom(), p.image_height);
    for (int y = y0; y < y1; ++y) {
      for (int x = x0; x < x1; ++x) {
        ++counts[static_cast<std::size_t>(y) * p.image_width + x];
      }
    }
  }
  return counts;
}

std::optional<PartitionViolation> validate_partition(const Partition& p) {
  using Kind = PartitionViolation::Kind;
  if (p.image_width <= 0 || p.image_height <= 0) return PartitionViolation{Kind::kEmptyImage};

  for (std::size_t i = 0; i < p.rects.size(); ++i) {
    const Rect& r = p.rects[i];
    if (r.w < 1 || r.h < 1) return PartitionViolation{Kind::kDegenerateRect, i};
    if (r.x < 0 || r.y < 0 || r.right() > p.image_width || r.bottom() > p.image_height) {
      return PartitionViolation{Kind::kOutOfBounds, i};
    }
  }

  // Owner raster: index + 1 of the rect that claimed each pixel, 0 if none.
  const std::size_t width = static_cast<std::size_t>(p.image_width);
  std::vector<std::uint32_t> owner(width * p.image_height, 0);
  for (std::size_t i = 0; i < p.rects.size(); ++i) {
    const Rect& r = p.rects[i];
    for (int y = r.y; y < r.bottom(); ++y) {
      std::uint32_t* line = owner.data() + y * width;
      for (int x = r.x; x < r.right(); ++x) {
        if (line[x] != 0) return PartitionViolation{Kind::kOverlap, line[x] - 1u, i, x, y};
        line[x] = static_cast<std::uint32_t>(i + 1);
      }
    }
  }

  const auto gap = std::find(owner.begin(), owner.end(), 0u);
  if (gap != owner.end()) {
    const auto offset = static_cast<std::size_t>(gap - owner.begin());
    return PartitionViolation{Kind::kGap, 0, 0, static_cast<int>(offset % width),
                              static_cast<int>(offset / width)};
  }
  return std::nullopt;
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.mapping.resize(n);
  std::iota(p.mapping.begin(), p.mapping.end(), std::size_t{0});
  return p;
}

bool Permutation::is_bijection() const {
  std::vector<bool> seen(mapping.size(), false);
  for (std::size_t target : mapping) {
    if (target >= mapping.size() || seen[target]) return false;
    seen[target] = true;
  }
  return true;
}

}  // namespace unprop
