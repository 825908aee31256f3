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
#include <cstdint>
#include <random>

#include "unprop/geometry.hpp"

namespace unprop {

/// The random stream used throughout. The engine's output sequence is fixed
/// by the standard; the distributions below are our own so that draws are
/// identical across standard library implementations.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n) by rejection sampling. n == 1 returns 0 and
/// consumes nothing; n == 0 is a precondition violation.
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform_unit(Rng& rng);

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the independent stream for item `index` of a batch run with
/// `seed`: mix64(seed ^ mix64(index)). Adding items to the end of a batch
/// never changes the streams of earlier items.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index));
}

/// Uniform random permutation by Fisher-Yates: for i = n-1 down to 1, swap
/// slot i with slot uniform_index(i + 1).
Permutation random_permutation(std::size_t n, Rng& rng);

}  // namespace unprop
