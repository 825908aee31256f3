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

#include "unprop/partitioner.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "unprop/errors.hpp"

namespace unprop {

std::pair<Rect, Rect> split_rect(const Rect& r, SplitDirection dir, int offset) {
  const int extent = dir == SplitDirection::kVertical ? r.w : r.h;
  if (offset < 1 || offset > extent - 1) {
    throw InvalidOffset("split offset " + std::to_string(offset) + " outside [1, " +
                        std::to_string(extent - 1) + "]");
  }
  if (dir == SplitDirection::kVertical) {
    return {Rect{r.x, r.y, offset, r.h}, Rect{r.x + offset, r.y, r.w - offset, r.h}};
  }
  return {Rect{r.x, r.y, r.w, offset}, Rect{r.x, r.y + offset, r.w, r.h - offset}};
}

int draw_unequal_offset(int extent, Rng& rng) {
  if (extent < 2) throw InvalidOffset("extent " + std::to_string(extent) + " cannot be split");
  const auto draw = [&] { return 1 + static_cast<int>(uniform_index(rng, extent - 1)); };
  int offset = draw();
  const bool even = extent % 2 == 0;
  if (even && extent > 2 && offset == extent / 2) {
    offset = draw();
    if (offset == extent / 2) offset = std::min(offset + 1, extent - 1);
  }
  return offset;
}

Partition generate_partition(int width, int height, int target_rects, Rng& rng) {
  if (width < 1 || height < 1) throw InvalidArgument("partition needs a non-empty image");
  if (target_rects < 2) throw InvalidArgument("partition needs at least 2 rects");
  if (static_cast<std::int64_t>(width) * height < target_rects) {
    throw InfeasiblePartition("a " + std::to_string(width) + "x" + std::to_string(height) +
                              " image cannot hold " + std::to_string(target_rects) + " rects");
  }

  Partition p{width, height, {Rect{0, 0, width, height}}};
  p.rects.reserve(static_cast<std::size_t>(target_rects));
  std::vector<std::size_t> candidates;
  candidates.reserve(static_cast<std::size_t>(target_rects));

  while (p.rects.size() < static_cast<std::size_t>(target_rects)) {
    candidates.clear();
    for (std::size_t i = 0; i < p.rects.size(); ++i) {
      if (p.rects[i].w > 1 || p.rects[i].h > 1) candidates.push_back(i);
    }
    if (candidates.empty()) throw InfeasiblePartition("no rect left to split");

    const std::size_t index = candidates[uniform_index(rng, candidates.size())];
    const Rect chosen = p.rects[index];

    SplitDirection dir;
    if (chosen.w > 1 && chosen.h > 1) {
      dir = uniform_index(rng, 2) == 0 ? SplitDirection::kVertical : SplitDirection::kHorizontal;
    } else {
      dir = chosen.w > 1 ? SplitDirection::kVertical : SplitDirection::kHorizontal;
    }
    const int extent = dir == SplitDirection::kVertical ? chosen.w : chosen.h;
    const auto [first, second] = split_rect(chosen, dir, draw_unequal_offset(extent, rng));

    p.rects[index] = first;
    p.rects.insert(p.rects.begin() + static_cast<std::ptrdiff_t>(index) + 1, second);
  }
  return p;
}

bool satisfies_aspect(const Rect& r, double aspect_ratio) {
  const double g = std::min(aspect_ratio, 1.0 / aspect_ratio);
  const double shorter = std::min(r.w, r.h);
  const double longer = std::max(r.w, r.h);
  return shorter / longer >= g;
}

Partition refine_partition(Partition p, double aspect_ratio, int max_steps) {
  if (!(aspect_ratio > 0.0)) throw InvalidArgument("aspect ratio must be positive");
  for (int step = 0; step < max_steps; ++step) {
    const auto it = std::find_if(p.rects.begin(), p.rects.end(),
                                 [&](const Rect& r) { return !satisfies_aspect(r, aspect_ratio); });
    if (it == p.rects.end()) break;

    // A violating rect is never square, so its longer side is at least 2.
    const bool wide = it->w > it->h;
    const int extent = wide ? it->w : it->h;
    int offset = extent / 2;
    if (extent % 2 == 0 && extent > 2) --offset;

    const auto [first, second] =
        split_rect(*it, wide ? SplitDirection::kVertical : SplitDirection::kHorizontal, offset);
    const auto at = it - p.rects.begin();
    p.rects[static_cast<std::size_t>(at)] = first;
    p.rects.insert(p.rects.begin() + at + 1, second);
  }
  return p;
}

}  // namespace unprop
