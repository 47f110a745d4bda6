// Copyright 2026 The cmsim Authors
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

namespace cmsim {

/// Bad argument to a library call: unknown label, dimension mismatch, bad partition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A register would exceed the configured qubit capacity.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, int max_feasible_steps = -1)
      : std::runtime_error(what), max_feasible_steps_(max_feasible_steps) {}

  /// Largest step count that fits, or -1 when not applicable.
  int max_feasible_steps() const noexcept { return max_feasible_steps_; }

 private:
  int max_feasible_steps_;
};

/// A representation was requested for a configuration it does not define.
class UnsupportedConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A density operator or unitary failed its numerical invariants.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cmsim
