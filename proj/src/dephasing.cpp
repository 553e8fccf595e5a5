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

#include "qslip/dephasing.hpp"

#include <cmath>
#include <limits>

#include "qslip/numerics/parallel.hpp"

namespace qslip {

namespace {
const double kSqrtLn2 = std::sqrt(std::log(2.0));
}

FluxNoiseModel FluxNoiseModel::echo(double A_uPhi0) {
  FluxNoiseModel m{A_uPhi0, std::log(2.0)};
  m.validate();
  return m;
}

FluxNoiseModel FluxNoiseModel::ramsey(double A_uPhi0) {
  // A_R1 = 4 A sqrt(ln2)  <=>  sqrt(xi) = 4 sqrt(ln2)
  FluxNoiseModel m{A_uPhi0, 16.0 * std::log(2.0)};
  m.validate();
  return m;
}

double flux_dephasing_rate(const FluxNoiseModel& model, double dispersion_GHz_per_Phi0) {
  model.validate();
  if (!std::isfinite(dispersion_GHz_per_Phi0))
    throw ValidationError("flux_dephasing_rate: dispersion must be finite");
  const double disp_Hz = std::abs(dispersion_GHz_per_Phi0) * 1e9;
  const double amp_Phi0 = model.amplitude_uPhi0_rtHz * 1e-6;
  return kTwoPi * disp_Hz * amp_Phi0 * std::sqrt(model.filter_factor);
}

double ramsey_flux_amplitude(double A_uPhi0) { return 4.0 * A_uPhi0 * kSqrtLn2; }

DephasingBudget total_ramsey_rate(double gamma_cqps_per_s, double gamma_flux_per_s) {
  if (gamma_cqps_per_s < 0.0 || gamma_flux_per_s < 0.0)
    throw ValidationError("total_ramsey_rate: rates must be non-negative");
  DephasingBudget b;
  b.gamma_cqps_per_s = gamma_cqps_per_s;
  b.gamma_flux_per_s = gamma_flux_per_s;
  b.gamma_total_per_s = std::hypot(gamma_cqps_per_s, gamma_flux_per_s);
  return b;
}

double gaussian_decay(double t_us, double T1_us, double T_phi_us, double f_MHz, double phi0_rad) {
  if (!(T1_us > 0.0 && T_phi_us > 0.0))
    throw ValidationError("gaussian_decay: T1 and T_phi must be positive");
  const double g = t_us / T_phi_us;
  return std::exp(-t_us / (2.0 * T1_us)) * std::exp(-g * g) *
         std::cos(kTwoPi * f_MHz * t_us + phi0_rad);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n < 2) throw ValidationError("linspace: need at least 2 points");
  std::vector<double> v(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + step * static_cast<double>(i);
  return v;
}

std::vector<CoherenceRow> coherence_vs_flux(const CoherenceInputs& in,
                                            const std::vector<double>& phi_grid,
                                            const BasisConfig& basis, unsigned threads) {
  in.params.validate();
  if (in.n_junctions < 1) throw ValidationError("coherence_vs_flux: N must be >= 1");
  if (!(in.eps_ps_GHz >= 0.0)) throw ValidationError("coherence_vs_flux: eps_ps must be >= 0");
  if (phi_grid.empty()) throw ValidationError("coherence_vs_flux: empty flux grid");

  const FluxNoiseModel ramsey = FluxNoiseModel::ramsey(in.A_phi_uPhi0_rtHz);
  BasisConfig fast = basis;
  fast.check_convergence = false;  // checked once below at the first grid point

  {
    FluxoniumParams q = in.params;
    q.phi_ext = phi_grid.front();
    BasisConfig checked = basis;
    checked.check_convergence = true;
    (void)eigensystem(q, checked, 2);
  }

  auto f01_at = [&](double phi) {
    FluxoniumParams q = in.params;
    q.phi_ext = phi;
    return transition_frequency_GHz(eigensystem(q, fast, 2), 0, 1);
  };

  std::vector<CoherenceRow> rows(phi_grid.size());
  parallel_for_index(phi_grid.size(), threads, [&](std::size_t i) {
    FluxoniumParams q = in.params;
    q.phi_ext = phi_grid[i];

    const EigenSolution sol = eigensystem(q, fast, 2);
    const PhaseGrid pgrid = wavefunctions_on_grid(sol);
    StructureFactor F;
    F.value = displacement_overlap(pgrid, 1) - displacement_overlap(pgrid, 0);
    F.phi_ext = q.phi_ext;
    const CqpsRate cq = cqps_dephasing_rate(in.n_junctions, in.eps_ps_GHz, F);

    // plain central difference; the stand-alone flux_dispersion carries the
    // Richardson check, redundant on a dense grid
    const double h = 1e-3;
    const double disp = (f01_at(q.phi_ext + h) - f01_at(q.phi_ext - h)) / (2.0 * h);
    const double gf = flux_dephasing_rate(ramsey, disp);
    const DephasingBudget budget = total_ramsey_rate(cq.gamma_per_s, gf);

    rows[i] = CoherenceRow{
        q.phi_ext, transition_frequency_GHz(sol, 0, 1),
        cq.T_phi_s,
        gf > 0.0 ? 1.0 / gf : std::numeric_limits<double>::infinity(),
        budget.gamma_total_per_s > 0.0 ? 1.0 / budget.gamma_total_per_s
                                       : std::numeric_limits<double>::infinity()};
  });
  return rows;
}

}  // namespace qslip
