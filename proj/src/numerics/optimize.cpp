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

#include "qslip/numerics/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qslip/errors.hpp"

namespace qslip {

namespace {

double checked_eval(const Objective& f, const std::vector<double>& x) {
  const double v = f(x);
  if (std::isnan(v)) throw OptimizationError("nelder_mead: objective returned NaN", x);
  return v;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, const std::vector<double>& start,
                             const NelderMeadOptions& opts) {
  const std::size_t n = start.size();
  if (n == 0) throw ValidationError("nelder_mead: empty start vector");

  std::vector<double> steps = opts.steps;
  if (steps.empty()) {
    steps.resize(n);
    for (std::size_t i = 0; i < n; ++i) steps[i] = 0.1 * (1.0 + std::abs(start[i]));
  }
  if (steps.size() != n) throw ValidationError("nelder_mead: steps size mismatch");

  // simplex of n+1 vertices
  std::vector<std::vector<double>> vx(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) vx[i + 1][i] += steps[i];
  std::vector<double> vf(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vf[i] = checked_eval(f, vx[i]);

  constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  NelderMeadResult res;
  int iter = 0;

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vf[a] < vf[b]; });
  };

  while (iter < opts.max_iter) {
    sort_simplex();
    const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];

    double fspread = std::abs(vf[worst] - vf[best]);
    double xspread = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      xspread = std::max(xspread, std::abs(vx[worst][i] - vx[best][i]));
    if (fspread <= opts.f_tol * (std::abs(vf[best]) + opts.f_tol) &&
        xspread <= opts.x_tol * (1.0 + std::abs(vx[best][0]))) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t v = 0; v <= n; ++v) {
      if (v == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += vx[v][i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double t) {
      std::vector<double> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = centroid[i] + t * (centroid[i] - vx[worst][i]);
      return p;
    };

    const auto xr = blend(alpha);
    const double fr = checked_eval(f, xr);
    ++iter;

    if (fr < vf[best]) {
      const auto xe = blend(gamma);
      const double fe = checked_eval(f, xe);
      if (fe < fr) {
        vx[worst] = xe;
        vf[worst] = fe;
      } else {
        vx[worst] = xr;
        vf[worst] = fr;
      }
    } else if (fr < vf[second_worst]) {
      vx[worst] = xr;
      vf[worst] = fr;
    } else {
      const auto xc = blend(-rho);
      const double fc = checked_eval(f, xc);
      if (fc < vf[worst]) {
        vx[worst] = xc;
        vf[worst] = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t v = 0; v <= n; ++v) {
          if (v == best) continue;
          for (std::size_t i = 0; i < n; ++i)
            vx[v][i] = vx[best][i] + sigma * (vx[v][i] - vx[best][i]);
          vf[v] = checked_eval(f, vx[v]);
        }
      }
    }
  }

  sort_simplex();
  res.x = vx[order[0]];
  res.fmin = vf[order[0]];
  res.iterations = iter;
  return res;
}

NelderMeadResult nelder_mead_multistart(const Objective& f, const std::vector<double>& start,
                                        const NelderMeadOptions& opts, int restarts, RngSeed seed) {
  NelderMeadResult best = nelder_mead(f, start, opts);
  Rng rng(seed);
  std::vector<double> steps = opts.steps;
  if (steps.empty()) {
    steps.resize(start.size());
    for (std::size_t i = 0; i < start.size(); ++i) steps[i] = 0.1 * (1.0 + std::abs(start[i]));
  }
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> s = start;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += steps[i] * rng.normal();
    NelderMeadResult cand;
    try {
      cand = nelder_mead(f, s, opts);
    } catch (const OptimizationError&) {
      continue;  // a wild restart may wander into NaN territory; skip it
    }
    if (cand.fmin < best.fmin) best = cand;
  }
  return best;
}

}  // namespace qslip
