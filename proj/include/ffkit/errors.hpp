// Copyright 2026 The ffkit Authors
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

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ffkit {

// Argument outside an operation's documented domain. `bound()` carries the
// violated threshold when there is a single numeric one, NaN otherwise.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what,
                       double bound = std::numeric_limits<double>::quiet_NaN())
      : std::domain_error(what), bound_(bound) {}

  double bound() const noexcept { return bound_; }

 private:
  double bound_;
};

// Requested object too large to materialize densely.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A numerical self-check failed (normalization drift, degenerate sampling
// weights, ...). Indicates a bug or an out-of-regime input, not user error.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse-structure query for a slot the row does not have.
class SlotError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace ffkit
