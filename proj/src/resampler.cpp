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

#include "unprop/resampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <vector>

#include "unprop/errors.hpp"

namespace unprop {

double cubic_kernel(double t, double a) {
  const double x = std::abs(t);
  if (x <= 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
  if (x < 2.0) return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
  return 0.0;
}

std::uint8_t quantize_sample(double v) {
  if (!(v > 0.0)) return 0;
  const double rounded = std::floor(v + 0.5 + kTieSnap);
  return rounded >= 255.0 ? 255 : static_cast<std::uint8_t>(rounded);
}

PatchView::PatchView(const Image& image, const Rect& region) : image_(&image), region_(region) {
  if (region.w < 1 || region.h < 1 || region.x < 0 || region.y < 0 ||
      region.right() > image.width() || region.bottom() > image.height()) {
    throw InvalidArgument("patch region is empty or outside the image");
  }
}

namespace {

// Four clamped source indices and weights per output position along one
// axis. Indices are relative to the patch origin.
struct AxisTaps {
  std::vector<std::array<int, 4>> index;
  std::vector<std::array<double, 4>> weight;
};

AxisTaps compute_taps(int src_extent, int dst_extent) {
  AxisTaps taps;
  taps.index.resize(static_cast<std::size_t>(dst_extent));
  taps.weight.resize(static_cast<std::size_t>(dst_extent));
  const double scale = static_cast<double>(src_extent) / dst_extent;
  for (int d = 0; d < dst_extent; ++d) {
    const double s = (d + 0.5) * scale - 0.5;
    const int base = static_cast<int>(std::floor(s));
    for (int k = 0; k < 4; ++k) {
      const int pos = base - 1 + k;
      taps.index[d][k] = std::clamp(pos, 0, src_extent - 1);
      taps.weight[d][k] = cubic_kernel(s - pos);
    }
  }
  return taps;
}

void copy_region(const PatchView& src, Image& dst, const Rect& dst_region) {
  const Image& image = src.image();
  const Rect& r = src.region();
  const std::size_t bytes = static_cast<std::size_t>(r.w) * image.channels();
  for (int y = 0; y < r.h; ++y) {
    std::memmove(dst.row(dst_region.y + y) + static_cast<std::size_t>(dst_region.x) * dst.channels(),
                 image.row(r.y + y) + static_cast<std::size_t>(r.x) * image.channels(), bytes);
  }
}

}  // namespace

void resize_patch_into(const PatchView& src, Image& dst, const Rect& dst_region) {
  const Image& image = src.image();
  const Rect& r = src.region();
  const int channels = image.channels();
  if (dst.channels() != channels) throw InvalidArgument("channel count mismatch");
  if (dst_region.w < 1 || dst_region.h < 1 || dst_region.x < 0 || dst_region.y < 0 ||
      dst_region.right() > dst.width() || dst_region.bottom() > dst.height()) {
    throw InvalidArgument("destination region is empty or outside the image");
  }
  if (dst_region.w == r.w && dst_region.h == r.h) {
    copy_region(src, dst, dst_region);
    return;
  }

  const AxisTaps xs = compute_taps(r.w, dst_region.w);
  const AxisTaps ys = compute_taps(r.h, dst_region.h);

  // Horizontal pass over every source row of the patch, kept in double.
  const std::size_t tmp_stride = static_cast<std::size_t>(dst_region.w) * channels;
  std::vector<double> tmp(static_cast<std::size_t>(r.h) * tmp_stride);
  for (int y = 0; y < r.h; ++y) {
    const std::uint8_t* line = image.row(r.y + y) + static_cast<std::size_t>(r.x) * channels;
    double* out = tmp.data() + static_cast<std::size_t>(y) * tmp_stride;
    for (int x = 0; x < dst_region.w; ++x) {
      const auto& idx = xs.index[x];
      const auto& w = xs.weight[x];
      for (int c = 0; c < channels; ++c) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += w[k] * line[idx[k] * channels + c];
        out[x * channels + c] = acc;
      }
    }
  }

  for (int y = 0; y < dst_region.h; ++y) {
    const auto& idx = ys.index[y];
    const auto& w = ys.weight[y];
    const double* rows[4];
    for (int k = 0; k < 4; ++k) rows[k] = tmp.data() + static_cast<std::size_t>(idx[k]) * tmp_stride;
    std::uint8_t* out = dst.row(dst_region.y + y) + static_cast<std::size_t>(dst_region.x) * channels;
    for (std::size_t i = 0; i < tmp_stride; ++i) {
      out[i] = quantize_sample(w[0] * rows[0][i] + w[1] * rows[1][i] + w[2] * rows[2][i] +
                               w[3] * rows[3][i]);
    }
  }
}

Image resize_patch(const PatchView& src, int out_w, int out_h) {
  if (out_w < 1 || out_h < 1) throw InvalidArgument("resize target must be at least 1x1");
  Image out(out_w, out_h, src.image().channels());
  resize_patch_into(src, out, Rect{0, 0, out_w, out_h});
  return out;
}

}  // namespace unprop
