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

#include "qslip/cqps.hpp"

#include <cmath>
#include <limits>

namespace qslip {

void ChargeConfiguration::validate(std::size_t n_junctions) const {
  if (offsets.size() != n_junctions + 1)
    throw ValidationError("ChargeConfiguration: need N + 1 island charges");
  for (double v : offsets)
    if (!(v >= 0.0 && v < 1.0))
      throw ValidationError("ChargeConfiguration: offsets must lie in [0, 1)");
}

namespace {

double overlap_on_stride(const std::vector<double>& v, std::size_t stride, std::size_t shift,
                         double dphi) {
  // trapezoid over the strided subgrid; boundary values are ~0 by the grid
  // invariant, so endpoint weights are immaterial but kept for form
  double acc = 0.0;
  std::size_t first = 0, last = 0;
  bool any = false;
  for (std::size_t i = shift; i < v.size(); i += stride) {
    const double prod = v[i] * v[i - shift];
    if (!any) {
      first = i;
      any = true;
    }
    last = i;
    acc += prod;
  }
  if (!any) return 0.0;
  acc -= 0.5 * (v[first] * v[first - shift] + v[last] * v[last - shift]);
  return acc * dphi;
}

std::uint64_t fnv1a(const void* bytes, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::complex<double> displacement_overlap(const PhaseGrid& grid, std::size_t level) {
  if (level >= grid.values.size())
    throw ValidationError("displacement_overlap: level out of range");
  const double shift_exact = kTwoPi / grid.dphi;
  const auto shift = static_cast<std::size_t>(std::llround(shift_exact));
  if (std::abs(shift_exact - static_cast<double>(shift)) > 1e-9 || shift == 0 ||
      shift % 2 != 0)
    throw ValidationError(
        "displacement_overlap: 2pi must be an even number of grid steps; use a grid whose "
        "point count is a multiple of 4L");

  const auto& v = grid.values[level];
  const double full = [&] {
    double acc = 0.0;
    for (std::size_t i = shift; i < v.size(); ++i) acc += v[i] * v[i - shift];
    acc -= 0.5 * (v[shift] * v[0] + v[v.size() - 1] * v[v.size() - 1 - shift]);
    return acc * grid.dphi;
  }();

  // refinement check: every second point, spacing 2*dphi
  const double coarse = overlap_on_stride(v, 2, shift, 2.0 * grid.dphi);
  if (std::abs(full - coarse) > 1e-6)
    throw ValidationError("displacement_overlap: grid too coarse (refinement shift " +
                          std::to_string(std::abs(full - coarse)) + "); increase M");
  return {full, 0.0};
}

StructureFactor structure_factor(const FluxoniumParams& p, std::size_t level_a, std::size_t level_b,
                                 const StructureFactorOptions& opts) {
  const std::size_t k = std::max(level_a, level_b) + 1;
  const EigenSolution sol = eigensystem(p, opts.basis, k);
  const PhaseGrid grid = wavefunctions_on_grid(sol, opts.grid);
  StructureFactor f;
  f.value = displacement_overlap(grid, level_b) - displacement_overlap(grid, level_a);
  f.level_a = level_a;
  f.level_b = level_b;
  f.phi_ext = p.phi_ext;
  return f;
}

CqpsEnergy total_cqps_energy(const std::vector<double>& eps_GHz, const ChargeConfiguration& cfg) {
  const std::size_t n = eps_GHz.size();
  if (n == 0) throw ValidationError("total_cqps_energy: empty epsilon list");
  cfg.validate(n);

  CqpsEnergy out;
  out.eps_per_junction_GHz = eps_GHz;
  out.configuration_hash = fnv1a(cfg.offsets.data(), cfg.offsets.size() * sizeof(double));

  double eta = 0.0;  // cumulative island charge; junction j encloses islands 0..j-1
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t j = 1; j <= n; ++j) {
    eta += cfg.offsets[j - 1];
    const double ang = -kTwoPi * eta;
    sum += eps_GHz[j - 1] * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  out.value_GHz = sum;
  return out;
}

double frequency_shift_GHz(const CqpsEnergy& e, const StructureFactor& f) {
  return (e.value_GHz * f.value).real();
}

double sigma_f_GHz(std::size_t n_junctions, double eps_GHz, const StructureFactor& f) {
  if (n_junctions < 1) throw ValidationError("sigma_f: N must be >= 1");
  return std::sqrt(static_cast<double>(n_junctions) / 2.0) * eps_GHz * f.abs();
}

CqpsRate cqps_dephasing_rate(std::size_t n_junctions, double eps_GHz, const StructureFactor& f) {
  if (n_junctions < 1) throw ValidationError("cqps_dephasing_rate: N must be >= 1");
  CqpsRate r;
  r.gamma_per_s = kPi * std::sqrt(static_cast<double>(n_junctions)) * (eps_GHz * 1e9) * f.abs();
  r.T_phi_s = r.gamma_per_s > 0.0 ? 1.0 / r.gamma_per_s : std::numeric_limits<double>::infinity();
  return r;
}

}  // namespace qslip
