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

#ifndef QSLIP_DEPHASING_HPP
#define QSLIP_DEPHASING_HPP

#include <string>
#include <vector>

#include "qslip/cqps.hpp"

namespace qslip {

/// 1/f flux noise S_Phi(w) = A_Phi^2 (2 pi x 1 Hz / |w|).  The filter factor
/// xi encodes the pulse sequence: ln 2 for Hahn echo; the Ramsey convention
/// used throughout is a fixed effective amplitude A_R1 = 4 A_Phi sqrt(ln 2),
/// i.e. xi = 16 ln 2 relative to the bare amplitude.
struct FluxNoiseModel {
  double amplitude_uPhi0_rtHz = 0.0;  ///< A_Phi
  double filter_factor = 0.0;         ///< xi

  static FluxNoiseModel echo(double A_uPhi0);
  static FluxNoiseModel ramsey(double A_uPhi0);

  void validate() const {
    if (!(amplitude_uPhi0_rtHz > 0.0 && filter_factor > 0.0))
      throw ValidationError("FluxNoiseModel: amplitude and filter factor must be positive");
  }
};

struct DephasingBudget {
  double gamma_cqps_per_s = 0.0;
  double gamma_flux_per_s = 0.0;
  double gamma_total_per_s = 0.0;  ///< quadrature sum
  double phi_ext = 0.0;
  std::string qubit_label;
};

/// Gamma_phi = |d w01 / d Phi| A_Phi sqrt(xi)
///           = 2 pi |d f01 / d Phi|[Hz/Phi0] * (A_Phi in Phi0) * sqrt(xi).
/// dispersion in GHz/Phi0, amplitude in uPhi0/sqrt(Hz); result in 1/s.
double flux_dephasing_rate(const FluxNoiseModel& model, double dispersion_GHz_per_Phi0);

/// Effective Ramsey amplitude A_R1 = 4 A_Phi sqrt(ln 2), in uPhi0/sqrt(Hz).
double ramsey_flux_amplitude(double A_uPhi0);

DephasingBudget total_ramsey_rate(double gamma_cqps_per_s, double gamma_flux_per_s);

/// Gaussian Ramsey/echo decay e^{-t/2T1} e^{-(t/Tphi)^2} cos(2 pi f t + phi0).
/// t, T1, Tphi in us; f in MHz.
double gaussian_decay(double t_us, double T1_us, double T_phi_us, double f_MHz, double phi0_rad);

struct CoherenceRow {
  double phi_ext;
  double f01_GHz;
  double T_cqps_s;
  double T_flux_s;
  double T_total_s;
};

struct CoherenceInputs {
  FluxoniumParams params;          ///< phi_ext field is ignored (grid sweeps it)
  std::size_t n_junctions = 1;     ///< N
  double eps_ps_GHz = 0.0;         ///< homogeneous array phase-slip energy
  double A_phi_uPhi0_rtHz = 0.0;   ///< 1/f flux-noise amplitude
  std::string label;
};

/// Full T_phiR(Phi) prediction: CQPS channel (Gamma = pi sqrt(N) eps |F01|),
/// Ramsey flux channel (A_R1 convention), and their quadrature total.
std::vector<CoherenceRow> coherence_vs_flux(const CoherenceInputs& in,
                                            const std::vector<double>& phi_grid,
                                            const BasisConfig& basis = {}, unsigned threads = 1);

/// Uniform inclusive grid helper.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace qslip

#endif  // QSLIP_DEPHASING_HPP
