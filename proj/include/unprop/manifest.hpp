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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "unprop/augment.hpp"
#include "unprop/bench.hpp"

namespace unprop {

/// One processed file of a batch run.
struct ManifestEntry {
  std::size_t index = 0;
  std::string input;
  std::string output;
  std::uint64_t stream_seed = 0;
  bool applied = false;
  std::optional<Partition> partition;
  std::optional<Permutation> permutation;
  /// Set instead of the fields above when the file was skipped.
  std::optional<std::string> error;
};

struct GridBaseline {
  int rows = 0;
  int cols = 0;
  friend bool operator==(const GridBaseline&, const GridBaseline&) = default;
};

/// Everything needed to replay a batch run byte for byte.
struct RunManifest {
  std::string tool_version = UNPROP_VERSION;
  std::string command;
  UnpropParams params;
  std::optional<GridBaseline> grid;
  std::vector<ManifestEntry> entries;
};

nlohmann::json to_json(const UnpropParams& params);
UnpropParams params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AugmentationRecord& rec);

nlohmann::json to_json(const RunManifest& m);
/// Throws InvalidArgument on missing or mistyped fields.
RunManifest manifest_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BenchReport& report);

}  // namespace unprop
