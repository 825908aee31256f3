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

#include "unprop/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "unprop/augment.hpp"
#include "unprop/errors.hpp"
#include "unprop/image.hpp"
#include "unprop/random.hpp"

namespace unprop {

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.empty()) throw InvalidArgument("fit needs matching, non-empty samples");
  const double n = static_cast<double>(xs.size());
  const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  LinearFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  if (syy > 0.0) {
    fit.r_squared = 1.0 - ss_res / syy;
  } else {
    fit.r_squared = ss_res == 0.0 ? 1.0 : 0.0;
  }
  return fit;
}

std::vector<double> default_probes() {
  std::vector<double> probes;
  for (int i = 0; i <= 10; ++i) probes.push_back(i / 10.0);
  return probes;
}

RepTimer make_unprop_timer(const SweepConfig& config) {
  Rng fill(config.params.seed);
  Image image(config.image_size, config.image_size, config.channels);
  for (auto& sample : image.data()) sample = static_cast<std::uint8_t>(fill() >> 56);

  return [image = std::move(image), params = config.params](double p, std::uint64_t rep_seed) mutable {
    UnpropParams call = params;
    call.apply_prob = p;
    Rng rng(rep_seed);
    const auto start = std::chrono::steady_clock::now();
    unprop_inplace(image, call, rng);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
  };
}

BenchReport run_p_sweep(const SweepConfig& config, const RepTimer& timer) {
  if (config.reps < 1) throw InvalidArgument("reps must be at least 1");
  if (config.warmup < 0) throw InvalidArgument("warmup must be non-negative");
  if (config.probes.empty()) throw InvalidArgument("sweep needs at least one probe");
  for (std::size_t i = 0; i < config.probes.size(); ++i) {
    const double p = config.probes[i];
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("probe outside [0, 1]");
    if (i > 0 && !(p > config.probes[i - 1])) throw InvalidArgument("probes must be strictly increasing");
  }
  UnpropParams params = config.params;
  params.apply_prob = 0.0;
  params.validate();

  RepTimer run = timer ? timer : make_unprop_timer(config);
  BenchReport report;
  report.image_size = config.image_size;
  report.channels = config.channels;
  report.warmup = config.warmup;
  report.params = params;

  const std::uint64_t per_probe = static_cast<std::uint64_t>(config.warmup) + config.reps;
  std::vector<double> times(static_cast<std::size_t>(config.reps));
  for (std::size_t i = 0; i < config.probes.size(); ++i) {
    const double p = config.probes[i];
    const std::uint64_t first = i * per_probe;
    for (int w = 0; w < config.warmup; ++w) run(p, stream_seed(params.seed, first + w));
    for (int r = 0; r < config.reps; ++r) {
      times[r] = run(p, stream_seed(params.seed, first + config.warmup + r));
    }

    ProbePoint point;
    point.probability = p;
    point.reps = config.reps;
    point.mean_ms = std::accumulate(times.begin(), times.end(), 0.0) / config.reps;
    if (config.reps > 1) {
      double ss = 0.0;
      for (double t : times) ss += (t - point.mean_ms) * (t - point.mean_ms);
      point.std_dev_ms = std::sqrt(ss / (config.reps - 1));
    }
    report.probes.push_back(point);
  }

  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& point : report.probes) {
    xs.push_back(point.probability);
    ys.push_back(point.mean_ms);
  }
  report.fit = fit_line(xs, ys);
  return report;
}

std::string render_svg(const BenchReport& report) {
  constexpr double kWidth = 640;
  constexpr double kHeight = 320;
  constexpr double kLeft = 60;
  constexpr double kRight = 20;
  constexpr double kTop = 20;
  constexpr double kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double max_ms = 0.0;
  for (const auto& p : report.probes) max_ms = std::max(max_ms, p.mean_ms);
  if (max_ms <= 0.0) max_ms = 1.0;

  std::ostringstream svg;
  char buf[256];
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", kLeft,
                kTop, kLeft, kTop + plot_h);
  svg << buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", kLeft,
                kTop + plot_h, kLeft + plot_w, kTop + plot_h);
  svg << buf;

  const std::size_t n = report.probes.size();
  const double slot = plot_w / static_cast<double>(std::max<std::size_t>(n, 1));
  const double bar = slot * 0.6;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = report.probes[i];
    const double h = plot_h * p.mean_ms / max_ms;
    const double x = kLeft + slot * static_cast<double>(i) + (slot - bar) / 2;
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"#4a7ab5\">"
                  "<title>P=%.2f: %.4f ms</title></rect>\n",
                  x, kTop + plot_h - h, bar, h, p.probability, p.mean_ms);
    svg << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%.1f</text>\n", x + bar / 2,
                  kTop + plot_h + 15, p.probability);
    svg << buf;
  }
  std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">P</text>\n",
                kLeft + plot_w / 2, kHeight - 10);
  svg << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"15\" y=\"%.1f\" transform=\"rotate(-90 15 %.1f)\" "
                "text-anchor=\"middle\">Time [ms] (max %.3f)</text>\n",
                kTop + plot_h / 2, kTop + plot_h / 2, max_ms);
  svg << buf;
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace unprop
