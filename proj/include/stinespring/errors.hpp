// Copyright 2026 The Stinespring Authors
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
#include <stdexcept>
#include <string>

namespace stinespring {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimensions, factor lists or operands do not fit together.
class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what)
      : Error("shape mismatch: " + what) {}
};

/// A requested object would exceed the configured entry cap.
class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(const std::string& what, std::size_t entries,
                   std::size_t cap)
      : Error("instance too large: " + what + " needs " +
              std::to_string(entries) + " entries (cap " +
              std::to_string(cap) + ")"),
        entries_(entries) {}
  std::size_t entries() const { return entries_; }

 private:
  std::size_t entries_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error("domain error: " + what) {}
};

/// A map that was required to be a quantum channel is not one.
class NotAChannel : public Error {
 public:
  using Error::Error;
};

/// Linear inversion cannot proceed because the frame is too small or singular.
class FrameIncomplete : public Error {
 public:
  explicit FrameIncomplete(const std::string& what)
      : Error("frame not informationally complete: " + what) {}
};

}  // namespace stinespring
