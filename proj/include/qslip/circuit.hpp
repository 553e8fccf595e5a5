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

#ifndef QSLIP_CIRCUIT_HPP
#define QSLIP_CIRCUIT_HPP

#include <optional>
#include <vector>

#include "qslip/constants.hpp"
#include "qslip/errors.hpp"

namespace qslip {

/// Junction geometry plus the two process constants.
struct JunctionGeometry {
  double length_um = 0.0;
  double width_um = 0.0;
  double c_s_fF_per_um2 = 49.0;   ///< specific capacitance
  double J_c_uA_per_um2 = 0.15;   ///< critical current density

  double area_um2() const { return length_um * width_um; }

  void validate() const {
    if (!(length_um > 0.0 && width_um > 0.0 && c_s_fF_per_um2 > 0.0 && J_c_uA_per_um2 > 0.0))
      throw ValidationError("JunctionGeometry: all fields must be positive");
  }
};

/// Electrical junction parameters.  E_C is the single-electron charging
/// energy e^2/2C divided by h, in GHz.  Conventions for E_C differ across the
/// literature by factors of 2 and 4; everything in this library uses e^2/2C.
struct JunctionParams {
  double E_J_GHz = 0.0;
  double E_C_GHz = 0.0;
  double capacitance_fF = 0.0;
  double critical_current_uA = 0.0;

  void validate() const {
    if (!(E_J_GHz > 0.0 && E_C_GHz > 0.0))
      throw ValidationError("JunctionParams: E_J and E_C must be positive");
  }

  /// Build from energies alone; capacitance and critical current are filled
  /// in from the same unit relations so round-trips are exact.
  static JunctionParams from_energies(double E_J_GHz, double E_C_GHz);
};

/// Series JJA description.  The junction may come from geometry or be
/// specified directly (see junction_params_holding_EL for the path that
/// pins E_L instead of J_c).
struct ArraySpec {
  std::size_t count = 1;  ///< N
  JunctionParams junction;
  std::optional<JunctionGeometry> geometry;  ///< set when derived from geometry
  std::optional<std::vector<double>> per_junction_epsilon_GHz;  ///< override, length N

  void validate() const;

  static ArraySpec from_geometry(std::size_t count, const JunctionGeometry& g);
  static ArraySpec from_params(std::size_t count, const JunctionParams& p);
};

/// The Hamiltonian triple plus bias; the unit of all spectral computations.
struct FluxoniumParams {
  double E_J_GHz = 0.0;
  double E_C_GHz = 0.0;
  double E_L_GHz = 0.0;
  double phi_ext = 0.0;  ///< external flux in units of Phi0
  double n_g = 0.0;      ///< offset charge in Cooper-pair units, [0,1)

  void validate() const {
    if (!(E_J_GHz > 0.0 && E_C_GHz > 0.0 && E_L_GHz > 0.0))
      throw ValidationError("FluxoniumParams: E_J, E_C, E_L must be positive");
  }
};

/// C = c_s * l * w, E_C = (e^2/2C)/h, E_J = Phi0 * J_c * l * w / (2 pi h).
JunctionParams junction_from_geometry(const JunctionGeometry& g);

/// z = Z/R_Q = (1/2pi) sqrt(8 E_C / E_J), dimensionless.
double reduced_impedance(const JunctionParams& j);

/// sqrt(8 E_J E_C) in GHz.
double plasma_frequency_GHz(const JunctionParams& j);

/// E_L = E_JA / N for the array junction's Josephson energy.
double array_inductive_energy_GHz(const ArraySpec& a);

/// Array junction with the capacitance taken from geometry (c_s * l * w) and
/// the Josephson energy pinned by the target inductive energy, E_JA = N*E_L.
/// This is the parameter route that matches measured device tables when E_L
/// is known from spectroscopy; the plain geometry route above instead trusts
/// J_c.  Both are exposed because the two disagree at the ~20% level in z.
JunctionParams junction_params_holding_EL(const JunctionGeometry& g, std::size_t count,
                                          double E_L_GHz);

}  // namespace qslip

#endif  // QSLIP_CIRCUIT_HPP
