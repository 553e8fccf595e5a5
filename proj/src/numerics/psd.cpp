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

#include "qslip/numerics/psd.hpp"

#include <cmath>

#include "qslip/errors.hpp"
#include "qslip/numerics/fft.hpp"

namespace qslip {

SpectralDensity periodogram(std::span<const double> x, double dt_s) {
  if (x.size() < 4) throw ValidationError("periodogram: need at least 4 samples");
  if (!(dt_s > 0.0)) throw ValidationError("periodogram: dt must be positive");

  const std::size_t len = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(len);

  std::vector<double> centered(len);
  for (std::size_t i = 0; i < len; ++i) centered[i] = x[i] - mean;

  const std::size_t L = next_pow2(len);
  const auto X = real_fft_halfspectrum(centered, L);

  SpectralDensity out;
  out.dt_s = dt_s;
  out.n_samples = len;
  out.padded_length = L;
  out.df_Hz = 1.0 / (static_cast<double>(L) * dt_s);
  out.values.resize(X.size());
  const double norm = dt_s / static_cast<double>(len);
  for (std::size_t k = 0; k < X.size(); ++k) {
    const double p = std::norm(X[k]) * norm;
    const bool interior = k != 0 && k + 1 != X.size();
    out.values[k] = interior ? 2.0 * p : p;  // fold negative frequencies
  }
  return out;
}

BinnedPsd log_bin_psd(const SpectralDensity& psd, std::size_t bins_per_decade) {
  BinnedPsd out;
  if (psd.size() < 3 || bins_per_decade == 0) return out;
  const double fmin = psd.frequency(1);
  const double fmax = psd.frequency(psd.size() - 1);
  const double step = 1.0 / static_cast<double>(bins_per_decade);
  double lo = std::log10(fmin);
  const double hi = std::log10(fmax);
  while (lo < hi) {
    const double f0 = std::pow(10.0, lo), f1 = std::pow(10.0, lo + step);
    double sum = 0.0;
    std::size_t count = 0;
    std::size_t i0 = static_cast<std::size_t>(std::ceil(f0 / psd.df_Hz));
    std::size_t i1 = static_cast<std::size_t>(std::floor(f1 / psd.df_Hz));
    i0 = std::max<std::size_t>(i0, 1);
    i1 = std::min(i1, psd.size() - 1);
    for (std::size_t i = i0; i <= i1 && i < psd.size(); ++i) {
      sum += psd.values[i];
      ++count;
    }
    if (count > 0) {
      out.f_Hz.push_back(std::sqrt(f0 * f1));
      out.values.push_back(sum / static_cast<double>(count));
    }
    lo += step;
  }
  return out;
}

}  // namespace qslip
