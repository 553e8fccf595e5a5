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

#ifndef QSLIP_NUMERICS_PSD_HPP
#define QSLIP_NUMERICS_PSD_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qslip {

/// One-sided power spectral density on the grid f_i = i * df.
struct SpectralDensity {
  std::vector<double> values;  ///< bins 0..padded_length/2, units x^2/Hz
  double df_Hz = 0.0;
  double dt_s = 0.0;
  std::size_t n_samples = 0;      ///< length before zero padding
  std::size_t padded_length = 0;  ///< power of two used by the DFT
  std::string estimator = "periodogram";

  double frequency(std::size_t i) const { return df_Hz * static_cast<double>(i); }
  std::size_t size() const { return values.size(); }
};

/// Wiener-Khinchin periodogram: one-sided PSD = dt * |DFT(x - mean)|^2 / len,
/// folded onto positive frequencies.  The mean is removed before the DFT and
/// the series is zero-padded to the next power of two (recorded in
/// padded_length).  Satisfies Parseval: sum(values) * df == var(x - mean).
///
/// Preconditions: x.size() >= 4, dt > 0; otherwise ValidationError.
SpectralDensity periodogram(std::span<const double> x, double dt_s);

/// Geometric-mean log binning, used to tame single-periodogram scatter when
/// fitting rolloffs.  Returns (f, S) pairs; bins without samples are skipped.
struct BinnedPsd {
  std::vector<double> f_Hz;
  std::vector<double> values;
};
BinnedPsd log_bin_psd(const SpectralDensity& psd, std::size_t bins_per_decade = 16);

}  // namespace qslip

#endif  // QSLIP_NUMERICS_PSD_HPP
