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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "unprop/augment.hpp"
#include "unprop/bench.hpp"
#include "unprop/errors.hpp"
#include "unprop/imgio.hpp"
#include "unprop/manifest.hpp"
#include "unprop/partitioner.hpp"

namespace unprop::cli {
namespace fs = std::filesystem;

namespace {

constexpr std::uint8_t kBorderColor[3] = {255, 0, 255};
constexpr double kMinInconsistentFraction = 0.95;
constexpr int kVerifyMaxSide = 512;
constexpr int kVerifyMaxRects = 64;

struct CommonOptions {
  UnpropParams params;
  std::string baseline = "unprop";
  int rows = 3;
  int cols = 3;

  std::optional<GridBaseline> grid() const {
    if (baseline != "grid") return std::nullopt;
    return GridBaseline{rows, cols};
  }
};

void add_param_options(CLI::App& cmd, CommonOptions& o, bool with_prob) {
  cmd.add_option("--seed", o.params.seed, "Global seed")->envname("UNPROP_SEED")->capture_default_str();
  if (with_prob) {
    cmd.add_option("--prob", o.params.apply_prob, "Application probability P")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  }
  cmd.add_option("--rects", o.params.target_rects, "Target number of rectangles N")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  cmd.add_option("--aspect", o.params.aspect_ratio, "Target aspect ratio G")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--refine-steps", o.params.refine_steps, "Refinement step budget J")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_baseline_options(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--baseline", o.baseline, "unprop or grid")
      ->check(CLI::IsMember({"unprop", "grid"}))
      ->capture_default_str();
  cmd.add_option("--rows", o.rows, "Grid rows (grid baseline)")->check(CLI::PositiveNumber)->capture_default_str();
  cmd.add_option("--cols", o.cols, "Grid columns (grid baseline)")->check(CLI::PositiveNumber)->capture_default_str();
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const UnsupportedFormat*>(&e) ||
      dynamic_cast<const MalformedImage*>(&e)) {
    return kExitIo;
  }
  return kExitUsage;
}

AugmentationRecord plan_for(const Image& img, const CommonOptions& o, const UnpropParams& params,
                            Rng& rng) {
  if (const auto grid = o.grid()) {
    return plan_grid_shuffle(img.width(), img.height(), grid->rows, grid->cols, params, rng);
  }
  return plan_unprop(img.width(), img.height(), params, rng);
}

ImageFileFormat format_for_path(const fs::path& path) {
  return format_from_extension(path.extension().string()).value_or(ImageFileFormat::kPng);
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& input : inputs) {
    const fs::path path(input);
    if (fs::is_directory(path)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file() && format_from_extension(entry.path().extension().string())) {
          found.push_back(entry.path());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(path);
    }
  }
  return files;
}

/// Runs job(i) for i in [0, n) on `threads` workers. Results are indexed, so
/// completion order never matters.
template <typename Job>
void parallel_for(std::size_t n, int threads, Job job) {
  const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, 256));
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::min(workers, n); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) job(i);
    });
  }
}

bool write_manifest(const RunManifest& manifest, const std::string& path, std::ostream& err) {
  std::ofstream out(path);
  out << to_json(manifest).dump(2) << "\n";
  if (!out) {
    err << "error: cannot write manifest " << path << "\n";
    return false;
  }
  return true;
}

struct ApplyOptions {
  CommonOptions common;
  std::vector<std::string> inputs;
  std::string out_dir = "unprop_out";
  std::string format;
  std::string manifest;
  bool skip_errors = false;
  int threads = 1;
};

int cmd_apply(const ApplyOptions& o, std::ostream& out, std::ostream& err) {
  try {
    o.common.params.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::vector<fs::path> files = expand_inputs(o.inputs);
  if (files.empty()) {
    err << "error: no input images\n";
    return kExitUsage;
  }
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec) {
    err << "error: cannot create " << o.out_dir << ": " << ec.message() << "\n";
    return kExitIo;
  }

  // Output names keep the input stem; repeated stems get the index appended.
  std::vector<fs::path> outputs(files.size());
  std::map<std::string, int> stem_count;
  for (const auto& f : files) ++stem_count[f.stem().string()];
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::string stem = files[i].stem().string();
    if (stem_count[stem] > 1) stem += "_" + std::to_string(i);
    outputs[i] = fs::path(o.out_dir) / stem;
  }

  RunManifest manifest;
  manifest.command = "apply";
  manifest.params = o.common.params;
  manifest.grid = o.common.grid();
  manifest.entries.resize(files.size());
  std::vector<std::optional<std::string>> errors(files.size());
  std::vector<int> codes(files.size(), kExitOk);

  parallel_for(files.size(), o.threads, [&](std::size_t i) {
    ManifestEntry& entry = manifest.entries[i];
    entry.index = i;
    entry.input = files[i].string();
    entry.stream_seed = stream_seed(o.common.params.seed, i);
    try {
      Image img = load_image(files[i]);
      const ImageFileFormat fmt =
          o.format.empty() ? format_for_path(files[i]) : *format_from_extension(o.format);
      fs::path target = outputs[i];
      target += std::string(extension_for(fmt, img.channels()));
      entry.output = target.string();

      Rng rng(entry.stream_seed);
      AugmentationRecord rec = plan_for(img, o.common, o.common.params, rng);
      if (rec.applied) apply_mosaic(img, *rec.partition, *rec.permutation);
      save_image(img, target, fmt);
      entry.applied = rec.applied;
      entry.partition = std::move(rec.partition);
      entry.permutation = std::move(rec.permutation);
    } catch (const std::exception& e) {
      errors[i] = e.what();
      codes[i] = exit_code_for(e);
    }
  });

  int status = kExitOk;
  std::size_t applied = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (errors[i]) {
      err << "error: " << files[i].string() << ": " << *errors[i] << "\n";
      if (!o.skip_errors) return codes[i];
      manifest.entries[i].error = *errors[i];
      continue;
    }
    applied += manifest.entries[i].applied ? 1 : 0;
  }
  out << "processed " << files.size() << " file(s), augmented " << applied << "\n";
  if (!o.manifest.empty() && !write_manifest(manifest, o.manifest, err)) status = kExitIo;
  return status;
}

struct ReplayOptions {
  std::string manifest;
  std::string out_dir;
  int threads = 1;
};

int cmd_replay(const ReplayOptions& o, std::ostream& out, std::ostream& err) {
  RunManifest manifest;
  try {
    std::ifstream in(o.manifest);
    if (!in) throw IoError("cannot open " + o.manifest);
    manifest = manifest_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << o.manifest << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  if (manifest.tool_version != UNPROP_VERSION) {
    err << "warning: manifest written by version " << manifest.tool_version << ", replaying with "
        << UNPROP_VERSION << "\n";
  }
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec) {
    err << "error: cannot create " << o.out_dir << "\n";
    return kExitIo;
  }

  std::vector<std::optional<std::string>> errors(manifest.entries.size());
  std::vector<int> codes(manifest.entries.size(), kExitOk);
  parallel_for(manifest.entries.size(), o.threads, [&](std::size_t i) {
    const ManifestEntry& entry = manifest.entries[i];
    if (entry.error) return;
    try {
      Image img = load_image(entry.input);
      if (entry.applied) apply_mosaic(img, *entry.partition, *entry.permutation);
      const fs::path recorded(entry.output);
      save_image(img, fs::path(o.out_dir) / recorded.filename(), format_for_path(recorded));
    } catch (const std::exception& e) {
      errors[i] = e.what();
      codes[i] = exit_code_for(e);
    }
  });
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i]) {
      err << "error: " << manifest.entries[i].input << ": " << *errors[i] << "\n";
      return codes[i];
    }
  }
  out << "replayed " << manifest.entries.size() << " entr" << (manifest.entries.size() == 1 ? "y" : "ies")
      << "\n";
  return kExitOk;
}

struct VizOptions {
  CommonOptions common;
  std::string input;
  std::string output;
  std::string manifest;
};

Image to_rgb(const Image& img) {
  if (img.channels() == 3) return img;
  Image rgb(img.width(), img.height(), 3);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < 3; ++c) rgb.at(x, y, c) = img.at(x, y, 0);
    }
  }
  return rgb;
}

}  // namespace

/// Marks the top row and left column of every rect plus the image's right
/// column and bottom row, so each shared edge is drawn exactly once.
void draw_partition_borders(Image& rgb, const Partition& p, int x_offset) {
  const auto mark = [&](int x, int y) {
    for (int c = 0; c < 3; ++c) rgb.at(x_offset + x, y, c) = kBorderColor[c];
  };
  for (const Rect& r : p.rects) {
    for (int x = r.x; x < r.right(); ++x) mark(x, r.y);
    for (int y = r.y; y < r.bottom(); ++y) mark(r.x, y);
  }
  for (int y = 0; y < p.image_height; ++y) mark(p.image_width - 1, y);
  for (int x = 0; x < p.image_width; ++x) mark(x, p.image_height - 1);
}

namespace {

int cmd_viz(const VizOptions& o, std::ostream& out, std::ostream& err) {
  UnpropParams params = o.common.params;
  params.apply_prob = 1.0;
  try {
    params.validate();
    const Image original = load_image(o.input);
    if (!o.common.grid() &&
        static_cast<std::int64_t>(original.width()) * original.height() < params.target_rects) {
      err << "error: " << o.input << " has " << original.width() * original.height()
          << " pixel(s), below the minimum of " << params.target_rects << " rects\n";
      return kExitUsage;
    }
    Rng rng(stream_seed(params.seed, 0));
    const AugmentationRecord rec = plan_for(original, o.common, params, rng);
    Image augmented = original;
    apply_mosaic(augmented, *rec.partition, *rec.permutation);

    const Image left = to_rgb(original);
    const Image right = to_rgb(augmented);
    const int w = original.width();
    Image canvas(2 * w, original.height(), 3);
    for (int y = 0; y < canvas.height(); ++y) {
      std::copy_n(left.row(y), left.row_stride(), canvas.row(y));
      std::copy_n(right.row(y), right.row_stride(), canvas.row(y) + left.row_stride());
    }
    draw_partition_borders(canvas, *rec.partition, w);
    save_image(canvas, o.output, format_for_path(o.output));

    if (!o.manifest.empty()) {
      RunManifest manifest;
      manifest.command = "viz";
      manifest.params = params;
      manifest.grid = o.common.grid();
      ManifestEntry entry;
      entry.input = o.input;
      entry.output = o.output;
      entry.stream_seed = stream_seed(params.seed, 0);
      entry.applied = true;
      entry.partition = rec.partition;
      entry.permutation = rec.permutation;
      manifest.entries.push_back(std::move(entry));
      if (!write_manifest(manifest, o.manifest, err)) return kExitIo;
    }
    out << "wrote " << o.output << " (" << rec.partition->rects.size() << " rects)\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

struct BenchOptions {
  SweepConfig sweep;
  std::string output;
  std::string svg;
};

int cmd_bench(BenchOptions o, std::ostream& out, std::ostream& err) {
  if (o.sweep.probes.empty()) o.sweep.probes = default_probes();
  if (o.sweep.reps < 30) {
    err << "warning: " << o.sweep.reps << " rep(s) per probe is below 30; "
        << (o.sweep.reps < 2 ? "standard deviation is undefined and reported as null"
                             : "statistics will be noisy")
        << "\n";
  }
  BenchReport report;
  try {
    report = run_p_sweep(o.sweep);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  char line[128];
  out << "     P    mean [ms]   std [ms]\n";
  for (const auto& p : report.probes) {
    std::snprintf(line, sizeof line, "  %4.2f  %11.5f  %9s\n", p.probability, p.mean_ms,
                  p.std_dev_ms ? std::to_string(*p.std_dev_ms).c_str() : "null");
    out << line;
  }
  std::snprintf(line, sizeof line, "fit: time = %.5f * P + %.5f ms, r^2 = %.4f\n", report.fit.slope,
                report.fit.intercept, report.fit.r_squared);
  out << line;

  if (!o.output.empty()) {
    std::ofstream json_out(o.output);
    json_out << to_json(report).dump(2) << "\n";
    if (!json_out) {
      err << "error: cannot write " << o.output << "\n";
      return kExitIo;
    }
  }
  if (!o.svg.empty()) {
    std::ofstream svg_out(o.svg);
    svg_out << render_svg(report);
    if (!svg_out) {
      err << "error: cannot write " << o.svg << "\n";
      return kExitIo;
    }
  }
  return kExitOk;
}

struct VerifyOptions {
  CommonOptions common;
  int trials = 1000;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  UnpropParams params = o.common.params;
  params.apply_prob = 1.0;
  try {
    params.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  int tiling_failures = 0;
  int count_failures = 0;
  int refine_failures = 0;
  for (int t = 0; t < o.trials; ++t) {
    Rng rng(stream_seed(params.seed, static_cast<std::uint64_t>(t)));
    int w = 0;
    int h = 0;
    do {
      w = 1 + static_cast<int>(uniform_index(rng, kVerifyMaxSide));
      h = 1 + static_cast<int>(uniform_index(rng, kVerifyMaxSide));
    } while (w * h < 2);
    const int n = 2 + static_cast<int>(uniform_index(rng, std::min(kVerifyMaxRects, w * h) - 1));

    const Partition p = generate_partition(w, h, n, rng);
    if (p.rects.size() != static_cast<std::size_t>(n)) ++count_failures;
    if (validate_partition(p)) ++tiling_failures;
    const Partition refined = refine_partition(p, params.aspect_ratio, params.refine_steps);
    const auto count = refined.rects.size();
    if (count < p.rects.size() || count > p.rects.size() + params.refine_steps || validate_partition(refined)) {
      ++refine_failures;
    }
  }

  int inconsistent = 0;
  int bijection_failures = 0;
  for (int t = 0; t < o.trials; ++t) {
    Rng rng(stream_seed(params.seed ^ 0x5eedULL, static_cast<std::uint64_t>(t)));
    const AugmentationRecord rec = plan_unprop(kVerifyMaxSide, kVerifyMaxSide, params, rng);
    if (!rec.permutation->is_bijection()) ++bijection_failures;
    inconsistent += is_augmentation_inconsistent(rec) ? 1 : 0;
  }
  const double fraction = static_cast<double>(inconsistent) / o.trials;

  const auto report = [&](bool ok, const std::string& what) {
    out << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
    return ok;
  };
  bool ok = true;
  ok &= report(tiling_failures == 0,
               "partition tiling: " + std::to_string(o.trials - tiling_failures) + "/" +
                   std::to_string(o.trials) + " valid");
  ok &= report(count_failures == 0, "partition size: " + std::to_string(count_failures) + " wrong count(s)");
  ok &= report(refine_failures == 0,
               "refinement bound and tiling: " + std::to_string(refine_failures) + " failure(s)");
  ok &= report(bijection_failures == 0, "permutations are bijections");
  char buf[160];
  std::snprintf(buf, sizeof buf, "augmentation inconsistency: %.4f of %d records (need > %.2f)", fraction,
                o.trials, kMinInconsistentFraction);
  ok &= report(fraction > kMinInconsistentFraction, buf);
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unproportional mosaicing image augmentation", "unprop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", UNPROP_VERSION);

  ApplyOptions apply;
  auto* apply_cmd = app.add_subcommand("apply", "Augment image files");
  add_param_options(*apply_cmd, apply.common, true);
  add_baseline_options(*apply_cmd, apply.common);
  apply_cmd->add_option("inputs", apply.inputs, "Input images or directories")->required();
  apply_cmd->add_option("--out-dir,-o", apply.out_dir, "Output directory")->capture_default_str();
  apply_cmd->add_option("--format", apply.format, "Output format (default: same as input)")
      ->check(CLI::IsMember({"png", "ppm"}));
  apply_cmd->add_option("--manifest", apply.manifest, "Write a run manifest (JSON)");
  apply_cmd->add_flag("--skip-errors", apply.skip_errors, "Continue past unreadable files");
  apply_cmd->add_option("--threads,-j", apply.threads, "Worker threads")->check(CLI::PositiveNumber);

  ReplayOptions replay;
  auto* replay_cmd = app.add_subcommand("replay", "Re-create the outputs recorded in a manifest");
  replay_cmd->add_option("manifest", replay.manifest, "Manifest written by apply")->required();
  replay_cmd->add_option("--out-dir,-o", replay.out_dir, "Output directory")->required();
  replay_cmd->add_option("--threads,-j", replay.threads, "Worker threads")->check(CLI::PositiveNumber);

  VizOptions viz;
  auto* viz_cmd = app.add_subcommand("viz", "Render original and augmented image side by side");
  add_param_options(*viz_cmd, viz.common, false);
  add_baseline_options(*viz_cmd, viz.common);
  viz_cmd->add_option("input", viz.input, "Input image")->required();
  viz_cmd->add_option("--out,-o", viz.output, "Output image")->required();
  viz_cmd->add_option("--manifest", viz.manifest, "Write a run manifest (JSON)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time unprop across application probabilities");
  bench_cmd->add_option("--size", bench.sweep.image_size, "Square image side")
      ->check(CLI::Range(8, 8192))
      ->capture_default_str();
  bench_cmd->add_option("--channels", bench.sweep.channels, "1 or 3")
      ->check(CLI::IsMember({1, 3}))
      ->capture_default_str();
  bench_cmd->add_option("--probes", bench.sweep.probes, "Comma-separated probabilities")->delimiter(',');
  bench_cmd->add_option("--reps", bench.sweep.reps, "Timed reps per probe")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--warmup", bench.sweep.warmup, "Discarded reps per probe")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.sweep.params.seed, "Seed")->envname("UNPROP_SEED");
  bench_cmd->add_option("--rects", bench.sweep.params.target_rects)->check(CLI::Range(2, 1 << 20));
  bench_cmd->add_option("--aspect", bench.sweep.params.aspect_ratio)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--refine-steps", bench.sweep.params.refine_steps)->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--out,-o", bench.output, "Report path (JSON)");
  bench_cmd->add_option("--svg", bench.svg, "Bar chart path (SVG)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check partition invariants and inconsistency");
  add_param_options(*verify_cmd, verify.common, false);
  verify_cmd->add_option("--trials", verify.trials, "Random cases per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<const char*> argv{"unprop"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (apply_cmd->parsed()) return cmd_apply(apply, out, err);
  if (replay_cmd->parsed()) return cmd_replay(replay, out, err);
  if (viz_cmd->parsed()) return cmd_viz(viz, out, err);
  if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
  if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
  return kExitUsage;
}

}  // namespace unprop::cli
