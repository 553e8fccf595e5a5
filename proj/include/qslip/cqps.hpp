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

#ifndef QSLIP_CQPS_HPP
#define QSLIP_CQPS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qslip/spectrum.hpp"

namespace qslip {

/// Island offset charges in Cooper-pair units, islands j = 0..N for an
/// N-junction array (j = 0 is the small-junction island).  Only islands
/// 0..N-1 enter the cumulative Aharonov-Casher phases; the last entry is
/// carried for completeness of the loop description.
struct ChargeConfiguration {
  std::vector<double> offsets;  ///< length N + 1, each in [0, 1)

  void validate(std::size_t n_junctions) const;
};

/// F_ab: difference of 2pi-displaced overlaps between two eigenstates.
struct StructureFactor {
  std::complex<double> value;
  std::size_t level_a = 0;
  std::size_t level_b = 1;
  double phi_ext = 0.0;

  double abs() const { return std::abs(value); }
};

/// Complex total CQPS energy, sum over junctions of eps_ps,j with the
/// accumulated charge phases.
struct CqpsEnergy {
  std::complex<double> value_GHz;
  std::uint64_t configuration_hash = 0;
  std::vector<double> eps_per_junction_GHz;
};

struct CqpsRate {
  double gamma_per_s = 0.0;
  double T_phi_s = 0.0;  ///< 1/gamma
};

/// Overlap integral of a state with its own 2pi displacement,
///   integral dphi psi(phi) psi(phi - 2pi),
/// by trapezoid rule on the grid.  The 2pi shift must land on the lattice
/// (guaranteed by the default PhaseGrid).  Real for real eigenfunctions;
/// returned as complex for the general interface.
///
/// A built-in refinement check recomputes the value on every second grid
/// point; deviation above 1e-6 raises "grid too coarse".
std::complex<double> displacement_overlap(const PhaseGrid& grid, std::size_t level);

struct StructureFactorOptions {
  BasisConfig basis = {};
  GridSpec grid = {};
};

/// F_ab = <b|m+|b> - <a|m+|a> evaluated via the displacement approximation
/// on the phase grid.
StructureFactor structure_factor(const FluxoniumParams& p, std::size_t level_a, std::size_t level_b,
                                 const StructureFactorOptions& opts = {});

/// E_CQPS = sum_j eps_j exp(-i 2 pi eta_j), eta_j = sum_{k=0}^{j-1} n_g,k.
/// eps list has one entry per junction j = 1..N.
CqpsEnergy total_cqps_energy(const std::vector<double>& eps_GHz, const ChargeConfiguration& cfg);

/// h * delta f01 = Re[E_CQPS * F01]; returns GHz.
double frequency_shift_GHz(const CqpsEnergy& e, const StructureFactor& f);

/// Qubit-frequency linewidth h|sigma_f| = sqrt(N/2) eps |F01| for a
/// homogeneous array (single eps for all junctions); returns GHz.
double sigma_f_GHz(std::size_t n_junctions, double eps_GHz, const StructureFactor& f);

/// Ramsey dephasing rate Gamma = sqrt(2) pi |sigma_f| = pi sqrt(N) eps |F01|,
/// with eps converted to Hz, so the rate is in 1/s.
CqpsRate cqps_dephasing_rate(std::size_t n_junctions, double eps_GHz, const StructureFactor& f);

}  // namespace qslip

#endif  // QSLIP_CQPS_HPP
