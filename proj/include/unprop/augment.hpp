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
#include <functional>
#include <optional>

#include "unprop/geometry.hpp"
#include "unprop/image.hpp"
#include "unprop/params.hpp"
#include "unprop/random.hpp"

namespace unprop {

/// What one unprop call did. partition and permutation are present exactly
/// when applied is true.
struct AugmentationRecord {
  bool applied = false;
  std::optional<Partition> partition;
  std::optional<Permutation> permutation;
  UnpropParams params;

  friend bool operator==(const AugmentationRecord&, const AugmentationRecord&) = default;
};

struct UnpropResult {
  Image image;
  AugmentationRecord record;
};

/// Produces the permutation for a partition of n rects. The default is
/// random_permutation; tests inject fixed ones.
using PermutationSource = std::function<Permutation(std::size_t n, Rng& rng)>;

/// Draws the gate, partition and permutation for a width x height image
/// without touching pixels.
///
/// The gate draw P' = uniform_unit(rng) is always the first consumption;
/// the augmentation fires iff P' < P, so P = 0 never fires and P = 1 always
/// does. When it fires: generate_partition with N, then refine_partition
/// with (G, J), then the permutation.
AugmentationRecord plan_unprop(int width, int height, const UnpropParams& params, Rng& rng,
                               const PermutationSource& permuter = {});

/// Moves the content of rect j into rect mapping[j] for every j, resizing
/// it bicubically to the destination geometry. The partition must tile the
/// image and the permutation must be a bijection of matching size.
void apply_mosaic(Image& img, const Partition& partition, const Permutation& permutation);

/// Unproportional mosaicing, in place. Returns the record.
AugmentationRecord unprop_inplace(Image& img, const UnpropParams& params, Rng& rng,
                                  const PermutationSource& permuter = {});

UnpropResult unprop(const Image& img, const UnpropParams& params, Rng& rng,
                    const PermutationSource& permuter = {});

/// rows x cols grid of equal cells in row-major order; the last row and
/// column absorb the remainder pixels.
Partition grid_partition(int width, int height, int rows, int cols);

/// Gate and permutation for the grid-shuffle baseline, with the same gate
/// draw ordering as plan_unprop. params.target_rects and refinement are
/// unused.
AugmentationRecord plan_grid_shuffle(int width, int height, int rows, int cols,
                                     const UnpropParams& params, Rng& rng);

/// Grid-shuffle baseline: permutes the cells of grid_partition uniformly.
/// Requires rows * cols >= 2, width >= cols and height >= rows.
Image grid_shuffle(const Image& img, int rows, int cols, Rng& rng);

/// True iff some pair of rects is resized with different parameters, i.e.
/// the scale (dst_w/src_w, dst_h/src_h) differs between two rects. Throws
/// NotApplied for a record that was not applied.
bool is_augmentation_inconsistent(const AugmentationRecord& rec);

/// Intensity-order clause for one pixel pair: the order of (before_a,
/// before_b) must carry over to (after_a, after_b), ties included.
bool preserves_intensity_order(std::uint8_t before_a, std::uint8_t before_b,
                               std::uint8_t after_a, std::uint8_t after_b) noexcept;

/// Intensity consistency over all sample pairs of two same-shaped images.
/// Holds iff `after` is a non-decreasing function of `before` sample-wise,
/// which is checked through a 256-entry table rather than all pairs.
bool is_intensity_consistent(const Image& before, const Image& after);

}  // namespace unprop
