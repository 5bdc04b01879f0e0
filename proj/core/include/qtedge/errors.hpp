// Copyright 2026 The qtedge Authors
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

namespace qtedge {

/// Input outside the domain of an operation (bad parameter, violated
/// invariant, unreachable target).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure (quadrature, truncation, matrix exponential) did not
/// reach its accuracy target. `achieved()` carries the best error estimate or
/// conditioning figure that was reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}

  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace qtedge
