# Copyright 2026 The Unprop Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Unproportional mosaicing: random unequal rectangle partitioning with
content permutation and bicubic resampling."""

from ._unprop import (
    DEFAULT_APPLY_PROB,
    DEFAULT_ASPECT_RATIO,
    DEFAULT_REFINE_STEPS,
    DEFAULT_TARGET_RECTS,
    InfeasiblePartition,
    InvalidArgument,
    IoError,
    MalformedImage,
    NotApplied,
    UnsupportedFormat,
    __version__,
    apply_mosaic,
    cubic_kernel,
    generate_partition,
    grid_shuffle,
    is_augmentation_inconsistent,
    load_image,
    refine_partition,
    resize_patch,
    save_image,
    stream_seed,
    unprop,
    validate_partition,
)

__all__ = [
    "DEFAULT_APPLY_PROB",
    "DEFAULT_ASPECT_RATIO",
    "DEFAULT_REFINE_STEPS",
    "DEFAULT_TARGET_RECTS",
    "InfeasiblePartition",
    "InvalidArgument",
    "IoError",
    "MalformedImage",
    "NotApplied",
    "UnsupportedFormat",
    "__version__",
    "apply_mosaic",
    "cubic_kernel",
    "generate_partition",
    "grid_shuffle",
    "is_augmentation_inconsistent",
    "load_image",
    "refine_partition",
    "resize_patch",
    "save_image",
    "stream_seed",
    "unprop",
    "validate_partition",
]
