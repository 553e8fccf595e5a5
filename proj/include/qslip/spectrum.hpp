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

#ifndef QSLIP_SPECTRUM_HPP
#define QSLIP_SPECTRUM_HPP

#include <cstddef>
#include <vector>

#include "qslip/circuit.hpp"
#include "qslip/numerics/matrix.hpp"

namespace qslip {

/// Harmonic-oscillator (Fock) basis of the (E_C, E_L) mode, displaced to the
/// minimum of the quadratic potential term.  The cosine enters through the
/// analytically known oscillator displacement matrices, so the only
/// discretization knob is the dimension.
struct BasisConfig {
  std::size_t dimension = 150;
  bool check_convergence = true;  ///< re-solve at 2x dimension and compare

  void validate() const {
    if (dimension < 20) throw ValidationError("BasisConfig: dimension must be >= 20");
  }
};

/// Eigenpairs of the fluxonium Hamiltonian
///   H = 4 E_C (n - n_g)^2 - E_J cos(phi) + (E_L/2) (phi + 2 pi phi_ext)^2.
///
/// States are real coefficient vectors in the n_g = 0 gauge (a nonzero n_g
/// only multiplies eigenfunctions by exp(i n_g phi) and leaves energies and
/// densities unchanged; energies are nevertheless computed with n_g in the
/// matrix so the gauge invariance is a measurable statement).
struct EigenSolution {
  FluxoniumParams params;
  BasisConfig basis;
  std::vector<double> energies_GHz;          ///< ascending, size k
  std::vector<std::vector<double>> states;   ///< k vectors of basis coefficients
  bool converged = false;                    ///< dimension-doubling check passed

  std::size_t levels() const { return energies_GHz.size(); }
};

/// Wavefunctions evaluated on a uniform phase grid phi_i = -L*pi + i*dphi,
/// i = 0..M-1 (half-open so that a 2*pi shift lands exactly on the lattice
/// when L divides M).
struct PhaseGrid {
  double half_width_pi = 8.0;  ///< L
  std::size_t points = 4096;   ///< M
  double dphi = 0.0;
  std::vector<std::vector<double>> values;  ///< per state, length M

  double phi(std::size_t i) const {
    return -half_width_pi * kPi + dphi * static_cast<double>(i);
  }
};

struct GridSpec {
  double half_width_pi = 8.0;
  std::size_t points = 4096;
};

/// Diagonalize Eq.-type Hamiltonian above; k lowest levels.
/// Preconditions: k <= dimension/3 (convergence margin).
/// Throws ConvergenceError carrying both energy lists if the
/// dimension-doubling check is enabled and fails (tolerance 1e-6 GHz).
EigenSolution eigensystem(const FluxoniumParams& p, const BasisConfig& basis, std::size_t k);

/// energies[b] - energies[a]; requires b > a, both < levels().
double transition_frequency_GHz(const EigenSolution& sol, std::size_t a, std::size_t b);

struct DispersionResult {
  double value_GHz_per_Phi0 = 0.0;
  bool richardson_ok = true;     ///< halving the step moved the result < 0.1%
  double relative_shift = 0.0;   ///< |d(step/2) - d(step)| / |d(step/2)|
};

/// Central finite difference d f_ab / d phi_ext, step in Phi0 units.
/// Preconditions: 1e-6 <= step <= 1e-2.
DispersionResult flux_dispersion(const FluxoniumParams& p, std::size_t a, std::size_t b,
                                 double step_Phi0 = 1e-3, const BasisConfig& basis = {});

/// Evaluate the solution's states on a phase grid.
/// psi_alpha(phi) = sum_n c_n HO_n((phi + 2 pi phi_ext) / l) / sqrt(l) with
/// l = sqrt(2) * (2 E_C / E_L)^(1/4) the oscillator length of the LC mode.
/// Throws if boundary leakage exceeds 1e-8 (advising a larger L) or the
/// trapezoid norm misses 1 by more than 1e-6.
PhaseGrid wavefunctions_on_grid(const EigenSolution& sol, const GridSpec& grid = {});

/// Build the Hamiltonian matrix in the displaced harmonic basis (n_g = 0).
/// Exposed for tests; eigensystem() is the normal entry point.
SymmetricMatrix fluxonium_hamiltonian_matrix(const FluxoniumParams& p, std::size_t dim);

struct FluxSweepRow {
  double phi_ext;
  double f01_GHz;
  double f02_GHz;
  double f12_GHz;
};

/// Transition frequencies on a uniform flux grid (inclusive endpoints).
std::vector<FluxSweepRow> spectrum_flux_sweep(FluxoniumParams p, double phi_start, double phi_end,
                                              std::size_t npoints, const BasisConfig& basis = {},
                                              unsigned threads = 1);

}  // namespace qslip

#endif  // QSLIP_SPECTRUM_HPP
