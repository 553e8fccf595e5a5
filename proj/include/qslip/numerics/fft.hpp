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

#ifndef QSLIP_NUMERICS_FFT_HPP
#define QSLIP_NUMERICS_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qslip {

/// In-place radix-2 Cooley-Tukey.  data.size() must be a power of two.
/// sign = -1 forward, +1 inverse (inverse is unnormalized; divide by N).
void fft_radix2(std::vector<std::complex<double>>& data, int sign);

std::size_t next_pow2(std::size_t n);

/// Half-spectrum X_0..X_{L/2} of the real sequence x zero-padded to length
/// L = padded_length (power of two, >= x.size()).  Packs pairs of reals into
/// a length-L/2 complex transform so the work buffer stays at L/2.
std::vector<std::complex<double>> real_fft_halfspectrum(std::span<const double> x,
                                                        std::size_t padded_length);

}  // namespace qslip

#endif  // QSLIP_NUMERICS_FFT_HPP
