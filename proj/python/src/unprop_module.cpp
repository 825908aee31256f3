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

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "unprop/augment.hpp"
#include "unprop/errors.hpp"
#include "unprop/imgio.hpp"
#include "unprop/manifest.hpp"
#include "unprop/partitioner.hpp"
#include "unprop/resampler.hpp"

namespace py = pybind11;
using namespace unprop;

namespace {

using ByteArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

// Accepts (H, W) or (H, W, C) uint8 arrays with C in {1, 3}.
Image image_from_array(const ByteArray& array) {
  const auto info = array.request();
  if (info.ndim != 2 && info.ndim != 3) throw InvalidArgument("expected an (H, W) or (H, W, C) array");
  const int height = static_cast<int>(info.shape[0]);
  const int width = static_cast<int>(info.shape[1]);
  const int channels = info.ndim == 3 ? static_cast<int>(info.shape[2]) : 1;
  std::vector<std::uint8_t> data(static_cast<const std::uint8_t*>(info.ptr),
                                 static_cast<const std::uint8_t*>(info.ptr) + info.size);
  return Image(width, height, channels, std::move(data));
}

py::array_t<std::uint8_t> array_from_image(const Image& img, bool squeeze_gray) {
  std::vector<py::ssize_t> shape{img.height(), img.width()};
  if (!(squeeze_gray && img.channels() == 1)) shape.push_back(img.channels());
  py::array_t<std::uint8_t> out(shape);
  std::memcpy(out.mutable_data(), img.data().data(), img.size());
  return out;
}

py::object record_to_python(const AugmentationRecord& rec) {
  return py::module_::import("json").attr("loads")(to_json(rec).dump());
}

Partition partition_from_python(int width, int height, const std::vector<std::array<int, 4>>& rects) {
  Partition p{width, height, {}};
  for (const auto& r : rects) p.rects.push_back(Rect{r[0], r[1], r[2], r[3]});
  return p;
}

std::vector<std::array<int, 4>> rects_to_python(const Partition& p) {
  std::vector<std::array<int, 4>> out;
  for (const Rect& r : p.rects) out.push_back({r.x, r.y, r.w, r.h});
  return out;
}

UnpropParams make_params(double aspect_ratio, int target_rects, int refine_steps, double apply_prob,
                         std::uint64_t seed) {
  UnpropParams params;
  params.aspect_ratio = aspect_ratio;
  params.target_rects = target_rects;
  params.refine_steps = refine_steps;
  params.apply_prob = apply_prob;
  params.seed = seed;
  params.validate();
  return params;
}

}  // namespace

PYBIND11_MODULE(_unprop, m) {
  m.doc() = "Unproportional mosaicing image augmentation";
  m.attr("__version__") = UNPROP_VERSION;
  m.attr("DEFAULT_ASPECT_RATIO") = UnpropParams::kDefaultAspectRatio;
  m.attr("DEFAULT_TARGET_RECTS") = UnpropParams::kDefaultTargetRects;
  m.attr("DEFAULT_REFINE_STEPS") = UnpropParams::kDefaultRefineSteps;
  m.attr("DEFAULT_APPLY_PROB") = UnpropParams::kDefaultApplyProb;

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<InfeasiblePartition>(m, "InfeasiblePartition", PyExc_ValueError);
  py::register_exception<NotApplied>(m, "NotApplied", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<UnsupportedFormat>(m, "UnsupportedFormat", PyExc_ValueError);
  py::register_exception<MalformedImage>(m, "MalformedImage", PyExc_ValueError);

  m.def(
      "unprop",
      [](const ByteArray& image, double aspect_ratio, int target_rects, int refine_steps, double apply_prob,
         std::uint64_t seed) {
        const UnpropParams params = make_params(aspect_ratio, target_rects, refine_steps, apply_prob, seed);
        Image img = image_from_array(image);
        AugmentationRecord rec;
        {
          py::gil_scoped_release release;
          Rng rng(seed);
          rec = unprop_inplace(img, params, rng);
        }
        return py::make_tuple(array_from_image(img, image.ndim() == 2), record_to_python(rec));
      },
      py::arg("image"), py::arg("aspect_ratio") = UnpropParams::kDefaultAspectRatio,
      py::arg("target_rects") = UnpropParams::kDefaultTargetRects,
      py::arg("refine_steps") = UnpropParams::kDefaultRefineSteps,
      py::arg("apply_prob") = UnpropParams::kDefaultApplyProb, py::arg("seed") = 0,
      "Augment an (H, W[, C]) uint8 array. Returns (image, record dict).");

  m.def(
      "apply_mosaic",
      [](const ByteArray& image, const std::vector<std::array<int, 4>>& rects,
         const std::vector<std::size_t>& permutation) {
        Image img = image_from_array(image);
        apply_mosaic(img, partition_from_python(img.width(), img.height(), rects), Permutation{permutation});
        return array_from_image(img, image.ndim() == 2);
      },
      py::arg("image"), py::arg("rects"), py::arg("permutation"),
      "Move rect j's content into rect permutation[j], resizing as needed.");

  m.def(
      "generate_partition",
      [](int width, int height, int target_rects, std::uint64_t seed) {
        Rng rng(seed);
        return rects_to_python(generate_partition(width, height, target_rects, rng));
      },
      py::arg("width"), py::arg("height"), py::arg("target_rects"), py::arg("seed") = 0);

  m.def(
      "refine_partition",
      [](int width, int height, const std::vector<std::array<int, 4>>& rects, double aspect_ratio, int max_steps) {
        return rects_to_python(refine_partition(partition_from_python(width, height, rects), aspect_ratio, max_steps));
      },
      py::arg("width"), py::arg("height"), py::arg("rects"), py::arg("aspect_ratio"), py::arg("max_steps"));

  m.def(
      "validate_partition",
      [](int width, int height, const std::vector<std::array<int, 4>>& rects) -> std::optional<std::string> {
        const auto violation = validate_partition(partition_from_python(width, height, rects));
        if (!violation) return std::nullopt;
        return violation->describe();
      },
      py::arg("width"), py::arg("height"), py::arg("rects"),
      "None when the rects tile the image exactly, otherwise a description of the first violation.");

  m.def("cubic_kernel", &cubic_kernel, py::arg("t"), py::arg("a") = kCubicSharpness);

  m.def(
      "resize_patch",
      [](const ByteArray& image, int out_w, int out_h) {
        const Image img = image_from_array(image);
        return array_from_image(resize_patch(PatchView(img, {0, 0, img.width(), img.height()}), out_w, out_h),
                                image.ndim() == 2);
      },
      py::arg("image"), py::arg("out_w"), py::arg("out_h"));

  m.def(
      "grid_shuffle",
      [](const ByteArray& image, int rows, int cols, std::uint64_t seed) {
        Rng rng(seed);
        return array_from_image(grid_shuffle(image_from_array(image), rows, cols, rng), image.ndim() == 2);
      },
      py::arg("image"), py::arg("rows"), py::arg("cols"), py::arg("seed") = 0);

  m.def(
      "is_augmentation_inconsistent",
      [](int width, int height, const std::vector<std::array<int, 4>>& rects,
         const std::vector<std::size_t>& permutation) {
        AugmentationRecord rec;
        rec.applied = true;
        rec.partition = partition_from_python(width, height, rects);
        rec.permutation = Permutation{permutation};
        return is_augmentation_inconsistent(rec);
      },
      py::arg("width"), py::arg("height"), py::arg("rects"), py::arg("permutation"));

  m.def("stream_seed", &stream_seed, py::arg("seed"), py::arg("index"));

  m.def(
      "load_image", [](const std::string& path) { return array_from_image(load_image(path), false); },
      py::arg("path"));
  m.def(
      "save_image",
      [](const ByteArray& image, const std::string& path) {
        const auto fmt = format_from_extension(std::filesystem::path(path).extension().string());
        if (!fmt) throw InvalidArgument("unknown image extension: " + path);
        save_image(image_from_array(image), path, *fmt);
      },
      py::arg("image"), py::arg("path"));
}
