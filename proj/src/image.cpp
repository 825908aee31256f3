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

#include "unprop/image.hpp"

#include <string>
#include <utility>

#include "unprop/errors.hpp"

namespace unprop {
namespace {

std::size_t checked_size(int width, int height, int channels) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("image dimensions must be positive, got " + std::to_string(width) + "x" +
                          std::to_string(height));
  }
  if (channels != 1 && channels != 3) {
    throw InvalidArgument("image must have 1 or 3 channels, got " + std::to_string(channels));
  }
  return static_cast<std::size_t>(width) * static_cast<std::size_t>(height) *
         static_cast<std::size_t>(channels);
}

}  // namespace

Image::Image(int width, int height, int channels)
    : width_(width),
      height_(height),
      channels_(channels),
      data_(checked_size(width, height, channels), 0) {}

Image::Image(int width, int height, int channels, std::vector<std::uint8_t> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
  const std::size_t expected = checked_size(width, height, channels);
  if (data_.size() != expected) {
    throw InvalidArgument("image buffer holds " + std::to_string(data_.size()) +
                          " samples, expected " + std::to_string(expected));
  }
}

}  // namespace unprop
