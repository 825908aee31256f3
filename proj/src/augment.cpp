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

#include "unprop/augment.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "unprop/errors.hpp"
#include "unprop/partitioner.hpp"
#include "unprop/resampler.hpp"

namespace unprop {

void UnpropParams::validate() const {
  if (!(aspect_ratio > 0.0) || !std::isfinite(aspect_ratio)) {
    throw InvalidArgument("aspect ratio must be a positive number");
  }
  if (target_rects < 2) throw InvalidArgument("target rect count must be at least 2");
  if (refine_steps < 0) throw InvalidArgument("refine steps must be non-negative");
  if (!(apply_prob >= 0.0 && apply_prob <= 1.0)) {
    throw InvalidArgument("apply probability must lie in [0, 1]");
  }
}

AugmentationRecord plan_unprop(int width, int height, const UnpropParams& params, Rng& rng,
                               const PermutationSource& permuter) {
  params.validate();
  AugmentationRecord rec;
  rec.params = params;

  const double gate = uniform_unit(rng);
  if (!(gate < params.apply_prob)) return rec;

  Partition partition = generate_partition(width, height, params.target_rects, rng);
  partition = refine_partition(std::move(partition), params.aspect_ratio, params.refine_steps);
  Permutation permutation = permuter ? permuter(partition.rects.size(), rng)
                                     : random_permutation(partition.rects.size(), rng);
  if (permutation.size() != partition.rects.size() || !permutation.is_bijection()) {
    throw InvalidArgument("permutation source returned an invalid permutation");
  }

  rec.applied = true;
  rec.partition = std::move(partition);
  rec.permutation = std::move(permutation);
  return rec;
}

void apply_mosaic(Image& img, const Partition& partition, const Permutation& permutation) {
  if (partition.image_width != img.width() || partition.image_height != img.height()) {
    throw InvalidArgument("partition size does not match the image");
  }
  if (const auto violation = validate_partition(partition)) {
    throw InvalidArgument("invalid partition: " + violation->describe());
  }
  if (permutation.size() != partition.rects.size() || !permutation.is_bijection()) {
    throw InvalidArgument("permutation is not a bijection over the partition");
  }

  const Image source = img;
  for (std::size_t j = 0; j < partition.rects.size(); ++j) {
    resize_patch_into(PatchView(source, partition.rects[j]), img,
                      partition.rects[permutation.mapping[j]]);
  }
}

AugmentationRecord unprop_inplace(Image& img, const UnpropParams& params, Rng& rng,
                                  const PermutationSource& permuter) {
  AugmentationRecord rec = plan_unprop(img.width(), img.height(), params, rng, permuter);
  if (rec.applied) apply_mosaic(img, *rec.partition, *rec.permutation);
  return rec;
}

UnpropResult unprop(const Image& img, const UnpropParams& params, Rng& rng,
                    const PermutationSource& permuter) {
  UnpropResult result{img, {}};
  result.record = unprop_inplace(result.image, params, rng, permuter);
  return result;
}

Partition grid_partition(int width, int height, int rows, int cols) {
  if (rows < 1 || cols < 1 || rows * cols < 2) {
    throw InvalidArgument("grid needs at least 2 cells");
  }
  if (width < cols || height < rows) throw InvalidArgument("grid has more cells than pixels");

  const int cell_w = width / cols;
  const int cell_h = height / rows;
  Partition p{width, height, {}};
  p.rects.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    const int h = r == rows - 1 ? height - cell_h * (rows - 1) : cell_h;
    for (int c = 0; c < cols; ++c) {
      const int w = c == cols - 1 ? width - cell_w * (cols - 1) : cell_w;
      p.rects.push_back(Rect{c * cell_w, r * cell_h, w, h});
    }
  }
  return p;
}

AugmentationRecord plan_grid_shuffle(int width, int height, int rows, int cols,
                                     const UnpropParams& params, Rng& rng) {
  params.validate();
  AugmentationRecord rec;
  rec.params = params;
  Partition grid = grid_partition(width, height, rows, cols);
  if (!(uniform_unit(rng) < params.apply_prob)) return rec;
  rec.permutation = random_permutation(grid.rects.size(), rng);
  rec.partition = std::move(grid);
  rec.applied = true;
  return rec;
}

Image grid_shuffle(const Image& img, int rows, int cols, Rng& rng) {
  const Partition grid = grid_partition(img.width(), img.height(), rows, cols);
  Image out = img;
  apply_mosaic(out, grid, random_permutation(grid.rects.size(), rng));
  return out;
}

bool is_augmentation_inconsistent(const AugmentationRecord& rec) {
  if (!rec.applied || !rec.partition || !rec.permutation) {
    throw NotApplied("inconsistency is only defined for applied records");
  }
  const auto& rects = rec.partition->rects;
  const auto& mapping = rec.permutation->mapping;
  if (mapping.size() != rects.size()) throw InvalidArgument("record permutation size mismatch");

  // Scale of rect j as exact fractions dst/src per axis; two scales are
  // equal iff the cross products agree.
  const auto same_scale = [&](std::size_t i, std::size_t j) {
    const Rect& si = rects[i];
    const Rect& di = rects[mapping[i]];
    const Rect& sj = rects[j];
    const Rect& dj = rects[mapping[j]];
    return std::int64_t{di.w} * sj.w == std::int64_t{dj.w} * si.w &&
           std::int64_t{di.h} * sj.h == std::int64_t{dj.h} * si.h;
  };
  for (std::size_t j = 1; j < rects.size(); ++j) {
    if (!same_scale(0, j)) return true;
  }
  return false;
}

bool preserves_intensity_order(std::uint8_t before_a, std::uint8_t before_b, std::uint8_t after_a,
                               std::uint8_t after_b) noexcept {
  if (before_a <= before_b && !(after_a <= after_b)) return false;
  if (before_b <= before_a && !(after_b <= after_a)) return false;
  return true;
}

bool is_intensity_consistent(const Image& before, const Image& after) {
  if (before.width() != after.width() || before.height() != after.height() ||
      before.channels() != after.channels()) {
    throw InvalidArgument("images differ in shape");
  }
  // Consistent iff equal inputs map to equal outputs and the induced map is
  // non-decreasing.
  std::array<int, 256> image_of;
  image_of.fill(-1);
  const auto in = before.data();
  const auto out = after.data();
  for (std::size_t i = 0; i < in.size(); ++i) {
    int& slot = image_of[in[i]];
    if (slot == -1) {
      slot = out[i];
    } else if (slot != out[i]) {
      return false;
    }
  }
  int last = -1;
  for (int v : image_of) {
    if (v == -1) continue;
    if (v < last) return false;
    last = v;
  }
  return true;
}

}  // namespace unprop
