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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unprop/params.hpp"

namespace unprop {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares of ys on xs. With zero variance in ys r_squared
/// is 1 when the fit is exact and 0 otherwise.
LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

struct ProbePoint {
  double probability = 0.0;
  double mean_ms = 0.0;
  /// Sample standard deviation; absent when reps < 2.
  std::optional<double> std_dev_ms;
  int reps = 0;
};

struct BenchReport {
  int image_size = 0;
  int channels = 0;
  int warmup = 0;
  UnpropParams params;
  std::vector<ProbePoint> probes;
  LinearFit fit;
};

struct SweepConfig {
  int image_size = 512;
  int channels = 3;
  /// apply_prob is ignored; each probe overrides it.
  UnpropParams params;
  std::vector<double> probes;
  int reps = 200;
  /// Reps run and discarded before each probe's measurement.
  int warmup = 10;
};

/// Returns the wall time in milliseconds of one call at probability p.
using RepTimer = std::function<double(double p, std::uint64_t rep_seed)>;

/// {0.0, 0.1, ..., 1.0}.
std::vector<double> default_probes();

/// Times in-place unprop on a fixed random image_size^2 image. Each call
/// seeds a fresh Rng from rep_seed before the clock starts.
RepTimer make_unprop_timer(const SweepConfig& config);

/// Runs warmup + reps calls of `timer` per probe (default:
/// make_unprop_timer) and fits mean time against P. Every rep gets a
/// distinct seed derived from params.seed. Throws InvalidArgument when a
/// probe lies outside [0, 1], probes are not strictly increasing, or
/// reps < 1.
BenchReport run_p_sweep(const SweepConfig& config, const RepTimer& timer = {});

/// Bar chart of mean time per probe, one bar per P.
std::string render_svg(const BenchReport& report);

}  // namespace unprop
