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

#include <utility>

#include "unprop/geometry.hpp"
#include "unprop/random.hpp"

namespace unprop {

/// Splits r into two disjoint children covering r. The first child keeps
/// r's origin; the second starts `offset` pixels further along the split
/// axis. Throws InvalidOffset unless 1 <= offset <= extent - 1.
std::pair<Rect, Rect> split_rect(const Rect& r, SplitDirection dir, int offset);

/// Random split offset in [1, extent - 1] that avoids the exact midpoint of
/// an even extent: a midpoint draw is redrawn once, and a second midpoint is
/// moved one pixel up (clamped to extent - 1). For extent 2 the only offset
/// is the midpoint and it is returned as is.
int draw_unequal_offset(int extent, Rng& rng);

/// Builds a random partition of a width x height image into exactly
/// `target_rects` rectangles.
///
/// Each iteration draws, in this order: the rect to split, uniformly over
/// the rects with an extent above one pixel (list order); the cut direction,
/// uniformly over the axes with extent above one (no draw when only one
/// axis qualifies); the offset via draw_unequal_offset. The chosen rect is
/// replaced in place by its first child and the second child is inserted
/// right after it.
///
/// Throws InvalidArgument for non-positive sizes or target_rects < 2 and
/// InfeasiblePartition when width * height < target_rects.
Partition generate_partition(int width, int height, int target_rects, Rng& rng);

/// True iff min(w, h) / max(w, h) >= min(G, 1/G).
bool satisfies_aspect(const Rect& r, double aspect_ratio);

/// Best-effort refinement toward the aspect ratio with at most `max_steps`
/// extra splits. Each step splits the first rect (list order) violating
/// satisfies_aspect across its longer axis at the midpoint; even extents
/// above two are cut one pixel before the midpoint so the children differ.
/// Deterministic: consumes no randomness.
Partition refine_partition(Partition p, double aspect_ratio, int max_steps);

}  // namespace unprop
