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

#include "unprop/geometry.hpp"
#include "unprop/image.hpp"

namespace unprop {

/// Catmull-Rom sharpness of the cubic convolution kernel.
inline constexpr double kCubicSharpness = -0.5;

/// Cubic convolution weight at distance t (in source pixels):
///   (a+2)|t|^3 - (a+3)|t|^2 + 1        for |t| <= 1
///   a|t|^3 - 5a|t|^2 + 8a|t| - 4a      for 1 < |t| < 2
///   0                                  otherwise
double cubic_kernel(double t, double a = kCubicSharpness);

/// Rounds an accumulated sample half away from zero and clamps to [0, 255].
/// Values within kTieSnap below a half count as the half, so that two
/// summation orders of the same convolution cannot round differently.
inline constexpr double kTieSnap = 1e-9;
std::uint8_t quantize_sample(double v);

/// Read-only view of a rectangular region of an image.
class PatchView {
 public:
  /// Throws InvalidArgument if the region is degenerate or not fully inside
  /// the image.
  PatchView(const Image& image, const Rect& region);

  const Image& image() const noexcept { return *image_; }
  const Rect& region() const noexcept { return region_; }

 private:
  const Image* image_;
  Rect region_;
};

/// Bicubic resize of the patch to out_w x out_h.
///
/// Output pixel d samples source coordinate (d + 0.5) * src / dst - 0.5 on
/// each axis, with a 4x4 cubic convolution support clamped to the patch
/// edges. Accumulation is in double; the result is quantized with
/// quantize_sample. Same-size resizes are exact copies.
Image resize_patch(const PatchView& src, int out_w, int out_h);

/// Same as resize_patch, but writes the result into `dst` at `dst_region`
/// (whose size is the output size). dst must have the source's channel
/// count.
void resize_patch_into(const PatchView& src, Image& dst, const Rect& dst_region);

}  // namespace unprop
