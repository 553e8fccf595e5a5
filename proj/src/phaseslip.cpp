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

#include "qslip/phaseslip.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qslip/numerics/eigen.hpp"

namespace qslip {

PhaseSlipAmplitude wkb_phase_slip_energy(const JunctionParams& j) {
  j.validate();
  const double ratio = 8.0 * j.E_J_GHz / j.E_C_GHz;
  const double root = std::sqrt(ratio);
  const double eps1 = 2.0 * std::sqrt(2.0 / kPi) * std::sqrt(8.0 * j.E_J_GHz * j.E_C_GHz) *
                      std::pow(ratio, 0.25) * std::exp(-root);

  const double z = reduced_impedance(j);
  const double wp = plasma_frequency_GHz(j);
  const double eps2 = 4.0 * std::sqrt(2.0) / kPi * wp * std::sqrt(1.0 / z) * std::exp(-4.0 / (kPi * z));

  if (eps1 > 0.0 && std::abs(eps1 - eps2) > 1e-12 * eps1)
    throw std::logic_error("wkb_phase_slip_energy: closed-form and impedance-form disagree");

  PhaseSlipAmplitude out;
  out.value_GHz = eps1;
  out.method = PhaseSlipMethod::kWkb;
  out.wkb_warning = j.E_J_GHz / j.E_C_GHz < 1.0;
  return out;
}

BandStructure charge_band_energies(const JunctionParams& j, std::size_t n_k, std::size_t n_charge,
                                   std::size_t n_bands) {
  j.validate();
  if (n_charge < 21 || n_charge % 2 == 0)
    throw ValidationError("charge_band_energies: n_charge must be odd and >= 21");
  if (n_k < 32) throw ValidationError("charge_band_energies: n_k must be >= 32");
  if (n_bands < 1 || n_bands > n_charge)
    throw ValidationError("charge_band_energies: bad band count");

  const long half = static_cast<long>(n_charge - 1) / 2;

  BandStructure out;
  out.n_k = n_k;
  out.bands_GHz.assign(n_bands, std::vector<double>(n_k, 0.0));

  std::vector<double> diag(n_charge), off(n_charge - 1, -0.5 * j.E_J_GHz);
  std::vector<double> vec(n_charge * n_charge);
  for (std::size_t ik = 0; ik < n_k; ++ik) {
    const double k = out.k_at(ik);
    for (std::size_t m = 0; m < n_charge; ++m) {
      const double n = static_cast<double>(static_cast<long>(m) - half);
      diag[m] = 4.0 * j.E_C_GHz * (n + k) * (n + k);
    }
    std::vector<double> d = diag, e = off;
    std::fill(vec.begin(), vec.end(), 0.0);
    for (std::size_t m = 0; m < n_charge; ++m) vec[m * n_charge + m] = 1.0;
    tridiagonal_eigen(d, e, &vec);

    // sort indices of the lowest n_bands eigenvalues
    std::vector<std::size_t> order(n_charge);
    for (std::size_t m = 0; m < n_charge; ++m) order[m] = m;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    for (std::size_t b = 0; b < n_bands; ++b) {
      const std::size_t col = order[b];
      const double top = std::max(std::abs(vec[0 * n_charge + col]),
                                  std::abs(vec[(n_charge - 1) * n_charge + col]));
      if (top * top > 1e-10)
        throw ValidationError(
            "charge_band_energies: retained band occupies the extreme charge states; "
            "increase n_charge");
      out.bands_GHz[b][ik] = d[col];
    }
  }
  return out;
}

std::vector<PhaseSlipAmplitude> band_fourier_amplitudes(const std::vector<double>& band_GHz,
                                                        std::size_t l_max, int band_index) {
  const std::size_t n = band_GHz.size();
  if (n < 8) throw ValidationError("band_fourier_amplitudes: need at least 8 samples");
  if (l_max < 1 || l_max >= n / 2)
    throw ValidationError("band_fourier_amplitudes: l_max out of range");

  std::vector<PhaseSlipAmplitude> out;
  out.reserve(l_max);
  for (std::size_t l = 1; l <= l_max; ++l) {
    std::complex<double> c(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double ang = -kTwoPi * static_cast<double>(l) * static_cast<double>(i) /
                         static_cast<double>(n);
      c += band_GHz[i] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    c /= static_cast<double>(n);
    PhaseSlipAmplitude amp;
    amp.value_GHz = 2.0 * std::abs(c);
    amp.band = band_index;
    amp.order = static_cast<int>(l);
    amp.method = PhaseSlipMethod::kBandFourier;
    out.push_back(amp);
  }
  return out;
}

std::vector<PhaseSlipAmplitude> band_fourier_amplitudes(const std::vector<double>& k_grid,
                                                        const std::vector<double>& band_GHz,
                                                        std::size_t l_max, int band_index) {
  const std::size_t n = k_grid.size();
  if (n != band_GHz.size())
    throw ValidationError("band_fourier_amplitudes: k grid and band size mismatch");
  if (n < 8) throw ValidationError("band_fourier_amplitudes: need at least 8 samples");
  const double step = 1.0 / static_cast<double>(n);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs((k_grid[i] - k_grid[i - 1]) - step) > 1e-9)
      throw ValidationError("band_fourier_amplitudes: k grid must be uniform over one period");
  }
  return band_fourier_amplitudes(band_GHz, l_max, band_index);
}

}  // namespace qslip
