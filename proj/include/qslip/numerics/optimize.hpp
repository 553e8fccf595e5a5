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

#ifndef QSLIP_NUMERICS_OPTIMIZE_HPP
#define QSLIP_NUMERICS_OPTIMIZE_HPP

#include <functional>
#include <vector>

#include "qslip/numerics/rng.hpp"

namespace qslip {

using Objective = std::function<double(const std::vector<double>&)>;

struct NelderMeadOptions {
  std::vector<double> steps;  ///< initial simplex edge per dim; empty = 0.1*(1+|x_i|)
  double f_tol = 1e-12;
  double x_tol = 1e-10;
  int max_iter = 4000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double fmin = 0.0;
  int iterations = 0;
  bool converged = false;  ///< false means the max-iteration stop fired
};

/// Derivative-free downhill simplex.  Throws OptimizationError carrying the
/// offending point if the objective returns NaN.
NelderMeadResult nelder_mead(const Objective& f, const std::vector<double>& start,
                             const NelderMeadOptions& opts = {});

/// Multi-start variant: `restarts` additional runs from Gaussian-perturbed
/// starts (scale per dim = corresponding step), best result wins.
/// Deterministic for a fixed seed.
NelderMeadResult nelder_mead_multistart(const Objective& f, const std::vector<double>& start,
                                        const NelderMeadOptions& opts, int restarts, RngSeed seed);

}  // namespace qslip

#endif  // QSLIP_NUMERICS_OPTIMIZE_HPP
