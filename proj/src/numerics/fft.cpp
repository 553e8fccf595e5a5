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

#include "qslip/numerics/fft.hpp"

#include <cmath>

#include "qslip/constants.hpp"
#include "qslip/errors.hpp"

namespace qslip {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_radix2(std::vector<std::complex<double>>& data, int sign) {
  const std::size_t n = data.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw ValidationError("fft_radix2: length must be a nonzero power of two");

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * kTwoPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = data[i + j];
        const std::complex<double> v = data[i + j + len / 2] * w;
        data[i + j] = u + v;
        data[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<std::complex<double>> real_fft_halfspectrum(std::span<const double> x,
                                                        std::size_t padded_length) {
  const std::size_t L = padded_length;
  if (L < 2 || (L & (L - 1)) != 0 || L < x.size())
    throw ValidationError("real_fft_halfspectrum: bad padded length");

  const std::size_t half = L / 2;
  std::vector<std::complex<double>> z(half);
  for (std::size_t j = 0; j < half; ++j) {
    const double re = 2 * j < x.size() ? x[2 * j] : 0.0;
    const double im = 2 * j + 1 < x.size() ? x[2 * j + 1] : 0.0;
    z[j] = {re, im};
  }
  fft_radix2(z, -1);

  std::vector<std::complex<double>> X(half + 1);
  const std::complex<double> z0 = z[0];
  X[0] = {z0.real() + z0.imag(), 0.0};
  X[half] = {z0.real() - z0.imag(), 0.0};
  for (std::size_t k = 1; k < half; ++k) {
    const std::complex<double> a = z[k];
    const std::complex<double> b = std::conj(z[half - k]);
    const std::complex<double> even = 0.5 * (a + b);
    const std::complex<double> odd = 0.5 * (a - b);
    const double ang = -kTwoPi * static_cast<double>(k) / static_cast<double>(L);
    const std::complex<double> tw(std::cos(ang), std::sin(ang));
    // odd part carries x[2j+1]; divide by i and apply the half-sample twiddle
    X[k] = even + tw * std::complex<double>(odd.imag(), -odd.real());
  }
  return X;
}

}  // namespace qslip
