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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "oracles/blit_oracle.hpp"
#include "unprop/imgio.hpp"
#include "unprop/manifest.hpp"

namespace unprop {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("unprop_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    ::unsetenv("UNPROP_SEED");
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  fs::path make_image(const std::string& name, int w, int h, int channels, std::uint64_t seed) {
    const fs::path path = dir_ / name;
    save_image(oracle::random_image(w, h, channels, seed), path,
               *format_from_extension(path.extension().string()));
    return path;
  }

  std::string p(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, GateOffLeavesImageUnchanged) {
  const auto in = make_image("in.png", 40, 30, 3, 1);
  ASSERT_EQ(run({"apply", "--seed", "7", "--prob", "0", in.string(), "-o", p("out")}), 0) << err_.str();
  EXPECT_EQ(load_image(dir_ / "out" / "in.png"), load_image(in));
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  const auto in = make_image("in.ppm", 64, 48, 3, 2);
  const std::vector<std::string> flags{"--seed", "7", "--prob", "1", "--rects", "5", "--aspect", "1.18",
                                       "--refine-steps", "7"};
  for (const char* out : {"a", "b"}) {
    auto args = flags;
    args.insert(args.begin(), "apply");
    args.push_back(in.string());
    args.push_back("-o");
    args.push_back(p(out));
    ASSERT_EQ(run(args), 0) << err_.str();
  }
  const std::string a = slurp(dir_ / "a" / "in.ppm");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(dir_ / "b" / "in.ppm"));
  EXPECT_NE(load_image(dir_ / "a" / "in.ppm"), load_image(in));
}

TEST_F(CliTest, DefaultsComeFromChosenHyperparameters) {
  const auto in = make_image("in.png", 16, 16, 1, 3);
  ASSERT_EQ(run({"apply", in.string(), "-o", p("out"), "--manifest", p("m.json")}), 0);
  const auto m = manifest_from_json(nlohmann::json::parse(slurp(dir_ / "m.json")));
  EXPECT_DOUBLE_EQ(m.params.aspect_ratio, 1.18);
  EXPECT_EQ(m.params.target_rects, 5);
  EXPECT_EQ(m.params.refine_steps, 7);
  EXPECT_DOUBLE_EQ(m.params.apply_prob, 0.1);
}

TEST_F(CliTest, SeedFallsBackToEnvironment) {
  const auto in = make_image("in.png", 16, 16, 1, 3);
  ::setenv("UNPROP_SEED", "99", 1);
  ASSERT_EQ(run({"apply", in.string(), "-o", p("o1"), "--manifest", p("m1.json")}), 0);
  ASSERT_EQ(run({"apply", "--seed", "5", in.string(), "-o", p("o2"), "--manifest", p("m2.json")}), 0);
  ::unsetenv("UNPROP_SEED");
  EXPECT_EQ(manifest_from_json(nlohmann::json::parse(slurp(dir_ / "m1.json"))).params.seed, 99u);
  EXPECT_EQ(manifest_from_json(nlohmann::json::parse(slurp(dir_ / "m2.json"))).params.seed, 5u);
}

TEST_F(CliTest, ManifestReplayReproducesOutputs) {
  std::vector<std::string> args{"apply", "--seed", "3", "--prob", "0.6", "-o", p("out"), "--manifest", p("m.json")};
  for (int i = 0; i < 6; ++i) args.push_back(make_image("img" + std::to_string(i) + ".ppm", 30 + i, 20, 3, i).string());
  ASSERT_EQ(run(args), 0) << err_.str();
  ASSERT_EQ(run({"replay", p("m.json"), "-o", p("replayed")}), 0) << err_.str();
  for (int i = 0; i < 6; ++i) {
    const std::string name = "img" + std::to_string(i) + ".ppm";
    EXPECT_EQ(slurp(dir_ / "out" / name), slurp(dir_ / "replayed" / name)) << name;
  }
}

TEST_F(CliTest, AppendingFilesKeepsEarlierOutputs) {
  const auto a = make_image("a.ppm", 32, 32, 3, 1);
  const auto b = make_image("b.ppm", 32, 32, 3, 2);
  ASSERT_EQ(run({"apply", "--prob", "1", a.string(), "-o", p("one")}), 0);
  ASSERT_EQ(run({"apply", "--prob", "1", a.string(), b.string(), "-o", p("two")}), 0);
  EXPECT_EQ(slurp(dir_ / "one" / "a.ppm"), slurp(dir_ / "two" / "a.ppm"));
}

TEST_F(CliTest, ThreadCountDoesNotChangeOutputs) {
  fs::create_directories(dir_ / "in");
  for (int i = 0; i < 8; ++i) make_image("in/f" + std::to_string(i) + ".png", 24 + i, 24, 3, i);
  ASSERT_EQ(run({"apply", "--prob", "1", p("in"), "-o", p("t1"), "-j", "1", "--manifest", p("m1.json")}), 0);
  ASSERT_EQ(run({"apply", "--prob", "1", p("in"), "-o", p("t4"), "-j", "4", "--manifest", p("m4.json")}), 0);
  for (int i = 0; i < 8; ++i) {
    const std::string name = "f" + std::to_string(i) + ".png";
    EXPECT_EQ(slurp(dir_ / "t1" / name), slurp(dir_ / "t4" / name));
  }
  auto m1 = nlohmann::json::parse(slurp(dir_ / "m1.json"));
  auto m4 = nlohmann::json::parse(slurp(dir_ / "m4.json"));
  for (auto& e : m4["entries"]) e["output"] = std::string(e["output"]).replace(e["output"].get<std::string>().find("t4"), 2, "t1");
  EXPECT_EQ(m1["entries"], m4["entries"]);
}

TEST_F(CliTest, DecodeFailureStopsUnlessSkipping) {
  const auto good = make_image("good.ppm", 16, 16, 3, 1);
  std::ofstream(dir_ / "bad.ppm") << "P6\n4 4\n255\nxx";
  EXPECT_EQ(run({"apply", (dir_ / "bad.ppm").string(), good.string(), "-o", p("out")}), cli::kExitIo);
  EXPECT_NE(err_.str().find("bad.ppm"), std::string::npos);
  EXPECT_EQ(run({"apply", "--skip-errors", (dir_ / "bad.ppm").string(), good.string(), "-o", p("out2"),
                 "--manifest", p("m.json")}),
            0);
  const auto m = manifest_from_json(nlohmann::json::parse(slurp(dir_ / "m.json")));
  ASSERT_TRUE(m.entries[0].error);
  EXPECT_FALSE(m.entries[1].error);
  EXPECT_TRUE(fs::exists(dir_ / "out2" / "good.ppm"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}), cli::kExitUsage);
  EXPECT_EQ(run({"apply"}), cli::kExitUsage);
  EXPECT_EQ(run({"apply", "--prob", "1.5", "x.png"}), cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--trials", "0"}), cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), cli::kExitUsage);
  EXPECT_EQ(run({"apply", p("missing.png"), "-o", p("out")}), cli::kExitIo);
}

// Border pixels of the right panel: image frame plus the top row and left
// column of every rect, recomputed from the manifest with a label raster.
std::size_t expected_border_pixels(const Partition& part) {
  std::vector<int> label(static_cast<std::size_t>(part.image_width) * part.image_height, -1);
  for (std::size_t i = 0; i < part.rects.size(); ++i) {
    const Rect& r = part.rects[i];
    for (int y = r.y; y < r.bottom(); ++y)
      for (int x = r.x; x < r.right(); ++x) label[y * part.image_width + x] = static_cast<int>(i);
  }
  std::size_t n = 0;
  for (int y = 0; y < part.image_height; ++y) {
    for (int x = 0; x < part.image_width; ++x) {
      const int l = label[y * part.image_width + x];
      const bool frame = x == 0 || y == 0 || x == part.image_width - 1 || y == part.image_height - 1;
      const bool left_edge = x > 0 && label[y * part.image_width + x - 1] != l;
      const bool top_edge = y > 0 && label[(y - 1) * part.image_width + x] != l;
      n += (frame || left_edge || top_edge) ? 1 : 0;
    }
  }
  return n;
}

std::size_t count_border_color(const Image& canvas, int x0, int x1) {
  std::size_t n = 0;
  for (int y = 0; y < canvas.height(); ++y)
    for (int x = x0; x < x1; ++x)
      n += canvas.at(x, y, 0) == 255 && canvas.at(x, y, 1) == 0 && canvas.at(x, y, 2) == 255;
  return n;
}

TEST_F(CliTest, VizBordersMatchPartitionFromManifest) {
  // Gray input, so no content pixel can carry the magenta border color.
  const auto in = make_image("in.pgm", 50, 40, 1, 4);
  for (const char* seed : {"1", "2", "3"}) {
    ASSERT_EQ(run({"viz", in.string(), "-o", p("viz.ppm"), "--seed", seed, "--manifest", p("v.json")}), 0)
        << err_.str();
    const auto m = manifest_from_json(nlohmann::json::parse(slurp(dir_ / "v.json")));
    ASSERT_EQ(m.entries.size(), 1u);
    ASSERT_TRUE(m.entries[0].applied);
    const Image canvas = load_image(dir_ / "viz.ppm");
    EXPECT_EQ(canvas.width(), 100);
    EXPECT_EQ(canvas.channels(), 3);
    EXPECT_EQ(count_border_color(canvas, 50, 100), expected_border_pixels(*m.entries[0].partition));
    EXPECT_EQ(count_border_color(canvas, 0, 50), 0u);
  }
}

TEST_F(CliTest, VizGridBaseline) {
  const auto in = make_image("in.pgm", 30, 30, 1, 5);
  ASSERT_EQ(run({"viz", in.string(), "-o", p("g.ppm"), "--baseline", "grid", "--rows", "3", "--cols", "3",
                 "--manifest", p("g.json")}),
            0)
      << err_.str();
  const auto m = manifest_from_json(nlohmann::json::parse(slurp(dir_ / "g.json")));
  ASSERT_TRUE(m.grid);
  const Partition& part = *m.entries[0].partition;
  ASSERT_EQ(part.rects.size(), 9u);
  for (const Rect& r : part.rects) {
    EXPECT_EQ(r.w, 10);
    EXPECT_EQ(r.h, 10);
  }
  EXPECT_EQ(count_border_color(load_image(dir_ / "g.ppm"), 30, 60), expected_border_pixels(part));
}

TEST_F(CliTest, VizRejectsTooSmallImage) {
  const auto in = make_image("tiny.pgm", 1, 1, 1, 6);
  EXPECT_EQ(run({"viz", in.string(), "-o", p("v.ppm")}), cli::kExitUsage);
  EXPECT_NE(err_.str().find("minimum"), std::string::npos);
}

TEST_F(CliTest, BenchWithSingleRepWarnsAndReportsNull) {
  ASSERT_EQ(run({"bench", "--size", "32", "--reps", "1", "--warmup", "0", "--out", p("r.json"), "--svg",
                 p("r.svg")}),
            0)
      << err_.str();
  EXPECT_NE(err_.str().find("warning"), std::string::npos);
  const auto j = nlohmann::json::parse(slurp(dir_ / "r.json"));
  ASSERT_EQ(j["probes"].size(), 11u);
  for (std::size_t i = 0; i < 11; ++i) {
    EXPECT_NEAR(j["probes"][i]["p"].get<double>(), i / 10.0, 1e-12);
    EXPECT_TRUE(j["probes"][i]["std_dev_ms"].is_null());
  }
  EXPECT_TRUE(j["fit"].contains("r_squared"));
  EXPECT_EQ(slurp(dir_ / "r.svg").rfind("<svg", 0), 0u);
}

TEST_F(CliTest, BenchCustomProbes) {
  ASSERT_EQ(run({"bench", "--size", "16", "--reps", "3", "--probes", "0,0.5,1", "--out", p("r.json")}), 0);
  EXPECT_EQ(nlohmann::json::parse(slurp(dir_ / "r.json"))["probes"].size(), 3u);
  EXPECT_EQ(run({"bench", "--size", "16", "--reps", "3", "--probes", "0.5,0.2"}), cli::kExitUsage);
}

TEST_F(CliTest, VerifyPasses) {
  EXPECT_EQ(run({"verify", "--trials", "200"}), 0) << out_.str();
  EXPECT_NE(out_.str().find("[PASS] partition tiling: 200/200 valid"), std::string::npos);
  EXPECT_EQ(out_.str().find("[FAIL]"), std::string::npos);
}

}  // namespace
}  // namespace unprop
