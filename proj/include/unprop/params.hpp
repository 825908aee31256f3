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

#include <cstdint>

namespace unprop {

/// Hyperparameters of one unprop application.
struct UnpropParams {
  static constexpr double kDefaultAspectRatio = 1.18;
  static constexpr int kDefaultTargetRects = 5;
  static constexpr int kDefaultRefineSteps = 7;
  static constexpr double kDefaultApplyProb = 0.1;

  /// Target aspect ratio G. Orientation-free: G and 1/G mean the same thing.
  double aspect_ratio = kDefaultAspectRatio;
  /// Number of rectangles N produced before refinement.
  int target_rects = kDefaultTargetRects;
  /// Upper bound J on extra splits during refinement.
  int refine_steps = kDefaultRefineSteps;
  /// Probability P that the augmentation fires.
  double apply_prob = kDefaultApplyProb;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument unless G > 0, N >= 2, J >= 0 and 0 <= P <= 1.
  void validate() const;

  friend bool operator==(const UnpropParams&, const UnpropParams&) = default;
};

}  // namespace unprop
