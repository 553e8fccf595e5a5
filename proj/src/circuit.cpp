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

#include "qslip/circuit.hpp"

#include <cmath>

namespace qslip {

JunctionParams JunctionParams::from_energies(double E_J_GHz, double E_C_GHz) {
  JunctionParams p;
  p.E_J_GHz = E_J_GHz;
  p.E_C_GHz = E_C_GHz;
  p.capacitance_fF = PhysicalConstants::charging_GHz_fF / E_C_GHz;
  p.critical_current_uA = E_J_GHz / PhysicalConstants::josephson_GHz_uA;
  p.validate();
  return p;
}

void ArraySpec::validate() const {
  if (count < 1) throw ValidationError("ArraySpec: N must be >= 1");
  junction.validate();
  if (per_junction_epsilon_GHz) {
    if (per_junction_epsilon_GHz->size() != count)
      throw ValidationError("ArraySpec: epsilon override length must equal N");
    for (double v : *per_junction_epsilon_GHz)
      if (v < 0.0) throw ValidationError("ArraySpec: epsilon override values must be >= 0");
  }
}

ArraySpec ArraySpec::from_geometry(std::size_t count, const JunctionGeometry& g) {
  ArraySpec a;
  a.count = count;
  a.geometry = g;
  a.junction = junction_from_geometry(g);
  a.validate();
  return a;
}

ArraySpec ArraySpec::from_params(std::size_t count, const JunctionParams& p) {
  ArraySpec a;
  a.count = count;
  a.junction = p;
  a.validate();
  return a;
}

JunctionParams junction_from_geometry(const JunctionGeometry& g) {
  g.validate();
  JunctionParams p;
  const double area = g.area_um2();
  p.capacitance_fF = g.c_s_fF_per_um2 * area;
  p.critical_current_uA = g.J_c_uA_per_um2 * area;
  p.E_C_GHz = PhysicalConstants::charging_GHz_fF / p.capacitance_fF;
  p.E_J_GHz = PhysicalConstants::josephson_GHz_uA * p.critical_current_uA;
  p.validate();
  return p;
}

double reduced_impedance(const JunctionParams& j) {
  j.validate();
  return std::sqrt(8.0 * j.E_C_GHz / j.E_J_GHz) / kTwoPi;
}

double plasma_frequency_GHz(const JunctionParams& j) {
  j.validate();
  return std::sqrt(8.0 * j.E_J_GHz * j.E_C_GHz);
}

double array_inductive_energy_GHz(const ArraySpec& a) {
  a.validate();
  return a.junction.E_J_GHz / static_cast<double>(a.count);
}

JunctionParams junction_params_holding_EL(const JunctionGeometry& g, std::size_t count,
                                          double E_L_GHz) {
  g.validate();
  if (count < 1) throw ValidationError("junction_params_holding_EL: N must be >= 1");
  if (!(E_L_GHz > 0.0)) throw ValidationError("junction_params_holding_EL: E_L must be positive");
  JunctionParams p;
  p.capacitance_fF = g.c_s_fF_per_um2 * g.area_um2();
  p.E_C_GHz = PhysicalConstants::charging_GHz_fF / p.capacitance_fF;
  p.E_J_GHz = E_L_GHz * static_cast<double>(count);
  p.critical_current_uA = p.E_J_GHz / PhysicalConstants::josephson_GHz_uA;
  p.validate();
  return p;
}

}  // namespace qslip
