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

#include "unprop/manifest.hpp"

#include "unprop/errors.hpp"

namespace unprop {

using nlohmann::json;

namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

json to_json(const UnpropParams& params) {
  return json{{"aspect_ratio", params.aspect_ratio},
              {"target_rects", params.target_rects},
              {"refine_steps", params.refine_steps},
              {"apply_prob", params.apply_prob},
              {"seed", params.seed}};
}

UnpropParams params_from_json(const json& j) {
  UnpropParams p;
  p.aspect_ratio = field<double>(j, "aspect_ratio");
  p.target_rects = field<int>(j, "target_rects");
  p.refine_steps = field<int>(j, "refine_steps");
  p.apply_prob = field<double>(j, "apply_prob");
  p.seed = field<std::uint64_t>(j, "seed");
  p.validate();
  return p;
}

json to_json(const Partition& p) {
  json rects = json::array();
  for (const Rect& r : p.rects) rects.push_back({r.x, r.y, r.w, r.h});
  return json{{"width", p.image_width}, {"height", p.image_height}, {"rects", std::move(rects)}};
}

Partition partition_from_json(const json& j) {
  Partition p;
  p.image_width = field<int>(j, "width");
  p.image_height = field<int>(j, "height");
  for (const auto& r : field<std::vector<std::vector<int>>>(j, "rects")) {
    if (r.size() != 4) throw InvalidArgument("rect must be [x, y, w, h]");
    p.rects.push_back(Rect{r[0], r[1], r[2], r[3]});
  }
  return p;
}

json to_json(const AugmentationRecord& rec) {
  json j{{"applied", rec.applied}, {"params", to_json(rec.params)}};
  if (rec.partition) j["partition"] = to_json(*rec.partition);
  if (rec.permutation) j["permutation"] = rec.permutation->mapping;
  return j;
}

json to_json(const RunManifest& m) {
  json entries = json::array();
  for (const auto& e : m.entries) {
    json entry{{"index", e.index}, {"input", e.input}, {"output", e.output},
               {"stream_seed", e.stream_seed}, {"applied", e.applied}};
    if (e.partition) entry["partition"] = to_json(*e.partition);
    if (e.permutation) entry["permutation"] = e.permutation->mapping;
    if (e.error) entry["error"] = *e.error;
    entries.push_back(std::move(entry));
  }
  json j{{"tool", "unprop"},
         {"version", m.tool_version},
         {"command", m.command},
         {"params", to_json(m.params)},
         {"entries", std::move(entries)}};
  j["baseline"] = m.grid ? json{{"kind", "grid"}, {"rows", m.grid->rows}, {"cols", m.grid->cols}}
                         : json{{"kind", "unprop"}};
  return j;
}

RunManifest manifest_from_json(const json& j) {
  RunManifest m;
  m.tool_version = field<std::string>(j, "version");
  m.command = field<std::string>(j, "command");
  m.params = params_from_json(field<json>(j, "params"));
  if (j.contains("baseline")) {
    const json baseline = field<json>(j, "baseline");
    const auto kind = field<std::string>(baseline, "kind");
    if (kind == "grid") {
      m.grid = GridBaseline{field<int>(baseline, "rows"), field<int>(baseline, "cols")};
    } else if (kind != "unprop") {
      throw InvalidArgument("unknown baseline kind '" + kind + "'");
    }
  }
  for (const auto& e : field<json>(j, "entries")) {
    ManifestEntry entry;
    entry.index = field<std::size_t>(e, "index");
    entry.input = field<std::string>(e, "input");
    entry.output = field<std::string>(e, "output");
    entry.stream_seed = field<std::uint64_t>(e, "stream_seed");
    entry.applied = field<bool>(e, "applied");
    if (e.contains("partition")) entry.partition = partition_from_json(e.at("partition"));
    if (e.contains("permutation")) {
      entry.permutation = Permutation{field<std::vector<std::size_t>>(e, "permutation")};
    }
    if (e.contains("error")) entry.error = field<std::string>(e, "error");
    if (entry.applied && (!entry.partition || !entry.permutation)) {
      throw InvalidArgument("applied entry lacks partition or permutation");
    }
    m.entries.push_back(std::move(entry));
  }
  return m;
}

json to_json(const BenchReport& report) {
  json probes = json::array();
  for (const auto& p : report.probes) {
    probes.push_back({{"p", p.probability},
                      {"mean_ms", p.mean_ms},
                      {"std_dev_ms", p.std_dev_ms ? json(*p.std_dev_ms) : json(nullptr)},
                      {"reps", p.reps}});
  }
  json params = to_json(report.params);
  params.erase("apply_prob");
  return json{{"tool", "unprop"},
              {"version", UNPROP_VERSION},
              {"image_size", report.image_size},
              {"channels", report.channels},
              {"warmup", report.warmup},
              {"params", std::move(params)},
              {"probes", std::move(probes)},
              {"fit",
               {{"slope_ms_per_p", report.fit.slope},
                {"intercept_ms", report.fit.intercept},
                {"r_squared", report.fit.r_squared}}}};
}

}  // namespace unprop
