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

#ifndef QSLIP_CONSTANTS_HPP
#define QSLIP_CONSTANTS_HPP

namespace qslip {

/// 2018 SI exact values. Single source of truth for every unit conversion in
/// the library; nothing downstream hard-codes derived combinations.
struct PhysicalConstants {
  static constexpr double electron_charge_C = 1.602176634e-19;
  static constexpr double planck_Js = 6.62607015e-34;
  static constexpr double flux_quantum_Wb = planck_Js / (2.0 * electron_charge_C);

  /// Single-electron charging energy for C in fF, result in GHz:
  /// E_C = e^2/(2C) / h.  Evaluates to ~19.37 GHz*fF but is derived, not pinned.
  static constexpr double charging_GHz_fF = electron_charge_C * electron_charge_C /
                                            (2.0 * planck_Js) * 1e15 / 1e9;

  /// Josephson energy per critical current, GHz per uA: E_J = Phi0*I_c/(2*pi*h).
  static constexpr double josephson_GHz_uA =
      flux_quantum_Wb / (2.0 * 3.14159265358979323846 * planck_Js) * 1e-6 / 1e9;
};

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace qslip

#endif  // QSLIP_CONSTANTS_HPP
