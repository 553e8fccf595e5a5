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

#ifndef QSLIP_PHASESLIP_HPP
#define QSLIP_PHASESLIP_HPP

#include <cstddef>
#include <vector>

#include "qslip/circuit.hpp"

namespace qslip {

enum class PhaseSlipMethod { kWkb, kBandFourier };

/// |amplitude| of an l-fold phase slip in band b, energy/h in GHz.
struct PhaseSlipAmplitude {
  double value_GHz = 0.0;
  int band = 0;
  int order = 1;  ///< l >= 1
  PhaseSlipMethod method = PhaseSlipMethod::kWkb;
  bool wkb_warning = false;  ///< set when E_J/E_C < 1 (outside WKB validity)
};

/// WKB phase-slip energy
///   eps = 2 sqrt(2/pi) sqrt(8 E_J E_C) (8 E_J/E_C)^(1/4) exp(-sqrt(8 E_J/E_C)),
/// equal (algebraically) to (4 sqrt2/pi) w_p sqrt(1/z) exp(-4/(pi z)).  Both
/// forms are evaluated and must agree to 1e-12 relative, otherwise a logic
/// error is thrown; E_J/E_C < 1 only sets the warning flag.
PhaseSlipAmplitude wkb_phase_slip_energy(const JunctionParams& j);

/// Bloch bands of the 2pi-periodic junction Hamiltonian
///   [4 E_C (n + k)^2 - E_J cos(phi)] u = hbar w_b^k u
/// on the uniform half-open quasicharge grid k = -1/2 + i/n_k.  Charge basis
/// n in [-(n_charge-1)/2, +(n_charge-1)/2]; the matrix is tridiagonal with
/// off-diagonal -E_J/2.
struct BandStructure {
  std::size_t n_k = 0;
  std::vector<std::vector<double>> bands_GHz;  ///< [band][ik]
  double k_at(std::size_t i) const {
    return -0.5 + static_cast<double>(i) / static_cast<double>(n_k);
  }
};

/// Preconditions: n_charge >= 21 and odd, n_k >= 32.  Errors if the retained
/// band leaks more than 1e-10 occupation into the extreme charge states.
BandStructure charge_band_energies(const JunctionParams& j, std::size_t n_k = 201,
                                   std::size_t n_charge = 41, std::size_t n_bands = 2);

/// eps_ps(b, l) = 2 |l-th Fourier coefficient of w_b^k| for l = 1..l_max,
/// band samples on a uniform half-open k grid covering one period.
std::vector<PhaseSlipAmplitude> band_fourier_amplitudes(const std::vector<double>& band_GHz,
                                                        std::size_t l_max, int band_index = 0);

/// Same, with an explicit k grid that is validated: uniform spacing 1/n over
/// one period, half-open.  Non-uniform grids raise ValidationError.
std::vector<PhaseSlipAmplitude> band_fourier_amplitudes(const std::vector<double>& k_grid,
                                                        const std::vector<double>& band_GHz,
                                                        std::size_t l_max, int band_index = 0);

}  // namespace qslip

#endif  // QSLIP_PHASESLIP_HPP
