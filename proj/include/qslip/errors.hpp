// Copyright 2026 The qslip Authors
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

#ifndef QSLIP_ERRORS_HPP
#define QSLIP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qslip {

/// Bad input: violated precondition or malformed data.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative routine failed to converge within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, int iterations)
      : std::runtime_error(what + " (iterations: " + std::to_string(iterations) + ")"),
        iterations_(iterations) {}

  ConvergenceError(const std::string& what, std::vector<double> coarse, std::vector<double> fine)
      : std::runtime_error(what), iterations_(0), coarse_(std::move(coarse)), fine_(std::move(fine)) {}

  int iterations() const { return iterations_; }
  const std::vector<double>& coarse_energies() const { return coarse_; }
  const std::vector<double>& fine_energies() const { return fine_; }

 private:
  int iterations_;
  std::vector<double> coarse_, fine_;
};

/// Objective evaluated to NaN during optimization.
class OptimizationError : public std::runtime_error {
 public:
  OptimizationError(const std::string& what, std::vector<double> point)
      : std::runtime_error(what), point_(std::move(point)) {}
  const std::vector<double>& point() const { return point_; }

 private:
  std::vector<double> point_;
};

/// Requested run would exceed the configured memory budget.
class MemoryCapError : public std::runtime_error {
 public:
  explicit MemoryCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qslip

#endif  // QSLIP_ERRORS_HPP
