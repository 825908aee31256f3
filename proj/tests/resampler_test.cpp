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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles/blit_oracle.hpp"
#include "oracles/resample_oracle.hpp"
#include "unprop/errors.hpp"
#include "unprop/random.hpp"
#include "unprop/resampler.hpp"

namespace unprop {
namespace {

TEST(CubicKernelTest, InterpolatesAtNodes) {
  EXPECT_DOUBLE_EQ(cubic_kernel(0.0), 1.0);
  EXPECT_DOUBLE_EQ(cubic_kernel(1.0), 0.0);
  EXPECT_DOUBLE_EQ(cubic_kernel(-1.0), 0.0);
  EXPECT_DOUBLE_EQ(cubic_kernel(2.0), 0.0);
  EXPECT_DOUBLE_EQ(cubic_kernel(3.7), 0.0);
}

TEST(CubicKernelTest, HalfPixelValues) {
  // (a+2)/8 - (a+3)/4 + 1 and the outer lobe at 1.5 with a = -0.5.
  EXPECT_DOUBLE_EQ(cubic_kernel(0.5), 0.5625);
  EXPECT_DOUBLE_EQ(cubic_kernel(-0.5), 0.5625);
  EXPECT_DOUBLE_EQ(cubic_kernel(1.5), -0.0625);
}

TEST(CubicKernelTest, MatchesOracleAndIsContinuous) {
  for (double t = -2.5; t <= 2.5; t += 0.01) {
    EXPECT_NEAR(cubic_kernel(t), oracle::catmull_rom(t), 1e-12);
  }
  EXPECT_NEAR(cubic_kernel(1.0 - 1e-9), cubic_kernel(1.0 + 1e-9), 1e-7);
  EXPECT_NEAR(cubic_kernel(2.0 - 1e-9), 0.0, 1e-7);
}

TEST(CubicKernelTest, WeightsSumToOne) {
  for (double frac = 0.0; frac < 1.0; frac += 1.0 / 97) {
    double sum = 0.0;
    for (int k = -1; k <= 2; ++k) sum += cubic_kernel(frac - k);
    EXPECT_NEAR(sum, 1.0, 1e-9) << frac;
  }
}

TEST(QuantizeTest, RoundsHalfAwayAndClamps) {
  EXPECT_EQ(quantize_sample(-4.2), 0);
  EXPECT_EQ(quantize_sample(0.49), 0);
  EXPECT_EQ(quantize_sample(0.5), 1);
  EXPECT_EQ(quantize_sample(2.5 - 1e-12), 3);
  EXPECT_EQ(quantize_sample(254.4), 254);
  EXPECT_EQ(quantize_sample(300.0), 255);
  EXPECT_EQ(quantize_sample(std::nan("")), 0);
}

TEST(ResizePatchTest, ConstantPatchStaysConstant) {
  Image img(8, 8, 1, std::vector<std::uint8_t>(64, 77));
  const Image out = resize_patch(PatchView(img, {0, 0, 8, 8}), 3, 5);
  EXPECT_EQ(out.width(), 3);
  EXPECT_EQ(out.height(), 5);
  for (auto v : out.data()) EXPECT_EQ(v, 77);
}

TEST(ResizePatchTest, SameSizeIsExactCopy) {
  const Image img = oracle::random_image(20, 15, 3, 4);
  const Rect region{3, 2, 11, 9};
  const Image out = resize_patch(PatchView(img, region), region.w, region.h);
  for (int y = 0; y < region.h; ++y)
    for (int x = 0; x < region.w; ++x)
      for (int c = 0; c < 3; ++c) ASSERT_EQ(out.at(x, y, c), img.at(region.x + x, region.y + y, c));
}

TEST(ResizePatchTest, RampUpsampleMatchesFrozenValues) {
  // Frozen from an exact rational evaluation of the convolution sum.
  Image ramp(4, 1, 1, {0, 60, 120, 180});
  const Image out = resize_patch(PatchView(ramp, {0, 0, 4, 1}), 8, 1);
  const std::vector<std::uint8_t> expected{0, 11, 44, 75, 105, 136, 169, 184};
  EXPECT_EQ(std::vector<std::uint8_t>(out.data().begin(), out.data().end()), expected);
  EXPECT_EQ(out, oracle::resize(ramp, 0, 0, 4, 1, 8, 1));
}

TEST(ResizePatchTest, OvershootIsClamped) {
  // A hard edge makes the negative lobes overshoot both ways.
  Image edge(4, 1, 1, {0, 0, 255, 255});
  const Image out = resize_patch(PatchView(edge, {0, 0, 4, 1}), 11, 1);
  EXPECT_EQ(out, oracle::resize(edge, 0, 0, 4, 1, 11, 1));
  EXPECT_EQ(out.data()[0], 0);
  EXPECT_EQ(out.data()[10], 255);
}

TEST(ResizePatchTest, MatchesScalarOracleOnRandomCases) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int w = 1 + static_cast<int>(uniform_index(rng, 24));
    const int h = 1 + static_cast<int>(uniform_index(rng, 24));
    const int channels = uniform_index(rng, 2) == 0 ? 1 : 3;
    const Image img = oracle::random_image(w + 4, h + 4, channels, rng());
    const Rect region{static_cast<int>(uniform_index(rng, 5)), static_cast<int>(uniform_index(rng, 5)), w, h};
    const int out_w = 1 + static_cast<int>(uniform_index(rng, 40));
    const int out_h = 1 + static_cast<int>(uniform_index(rng, 40));
    const Image got = resize_patch(PatchView(img, region), out_w, out_h);
    ASSERT_EQ(got, oracle::resize(img, region.x, region.y, w, h, out_w, out_h))
        << w << "x" << h << " -> " << out_w << "x" << out_h;
  }
}

TEST(ResizePatchTest, SeparableWithQuantizedIntermediateWithinOneStep) {
  // Row pass quantized to integers (no clamping), then a column pass, stays
  // within one step of the full-precision 2-D result.
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int w = 2 + static_cast<int>(uniform_index(rng, 16));
    const int h = 2 + static_cast<int>(uniform_index(rng, 16));
    const int ow = 1 + static_cast<int>(uniform_index(rng, 24));
    const int oh = 1 + static_cast<int>(uniform_index(rng, 24));
    const Image img = oracle::random_image(w, h, 1, rng());
    const Image full = resize_patch(PatchView(img, {0, 0, w, h}), ow, oh);

    std::vector<double> mid(static_cast<std::size_t>(h) * ow);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < ow; ++x) {
        const double s = (x + 0.5) * w / ow - 0.5;
        const int b = static_cast<int>(std::floor(s));
        double acc = 0;
        for (int i = b - 1; i <= b + 2; ++i) acc += cubic_kernel(s - i) * img.at(std::clamp(i, 0, w - 1), y, 0);
        mid[y * ow + x] = std::round(acc);
      }
    }
    for (int y = 0; y < oh; ++y) {
      const double s = (y + 0.5) * h / oh - 0.5;
      const int b = static_cast<int>(std::floor(s));
      for (int x = 0; x < ow; ++x) {
        double acc = 0;
        for (int j = b - 1; j <= b + 2; ++j) acc += cubic_kernel(s - j) * mid[std::clamp(j, 0, h - 1) * ow + x];
        ASSERT_LE(std::abs(int{quantize_sample(acc)} - int{full.at(x, y, 0)}), 1);
      }
    }
  }
}

TEST(ResizePatchTest, RejectsBadRegionsAndTargets) {
  Image img(4, 4, 1);
  EXPECT_THROW(PatchView(img, {2, 2, 3, 1}), InvalidArgument);
  EXPECT_THROW(PatchView(img, {0, 0, 0, 1}), InvalidArgument);
  EXPECT_THROW(resize_patch(PatchView(img, {0, 0, 4, 4}), 0, 3), InvalidArgument);
  Image rgb(4, 4, 3);
  EXPECT_THROW(resize_patch_into(PatchView(img, {0, 0, 2, 2}), rgb, {0, 0, 2, 2}), InvalidArgument);
}

}  // namespace
}  // namespace unprop
