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

#include <stdexcept>
#include <string>

namespace unprop {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A split offset would produce a child with zero extent.
class InvalidOffset : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// No rectangle can be split further but the target count is not reached.
class InfeasiblePartition : public Error {
 public:
  using Error::Error;
};

/// A query needs an applied augmentation record.
class NotApplied : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// The file is a recognized container but uses features we do not decode
/// (16-bit samples, palettes, alpha, maxval other than 255).
class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class MalformedImage : public Error {
 public:
  using Error::Error;
};

}  // namespace unprop
