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

#include "qslip/spectrum.hpp"

#include <cmath>

#include "qslip/numerics/eigen.hpp"
#include "qslip/numerics/parallel.hpp"

namespace qslip {

namespace {

double phi_zpf(const FluxoniumParams& p) { return std::pow(2.0 * p.E_C_GHz / p.E_L_GHz, 0.25); }

// Matrix elements of cos(phi) and sin(phi) for phi = phizpf*(a + adag), from
// the closed-form displacement operator <m|D(i*phizpf)|n>:
//   <n+a|cos phi|n> = (-1)^(a/2)   * r_n(a) * L_n^{a}(x)   (a even)
//   <n+a|sin phi|n> = (-1)^((a-1)/2) * r_n(a) * L_n^{a}(x) (a odd)
// with x = phizpf^2 and r_n(a) = e^{-x/2} phizpf^a sqrt(n!/(n+a)!).  The
// prefactor is folded into the Laguerre recurrence so every intermediate
// stays O(1) at any dimension.
void displacement_cos_sin(std::size_t dim, double phizpf, SymmetricMatrix& cosm,
                          SymmetricMatrix& sinm) {
  const double x = phizpf * phizpf;
  for (std::size_t a = 0; a < dim; ++a) {
    // M_0 = e^{-x/2} * prod_{j=1..a} (phizpf/sqrt(j))
    double m0 = std::exp(-0.5 * x);
    for (std::size_t j = 1; j <= a; ++j) m0 *= phizpf / std::sqrt(static_cast<double>(j));
    const double af = static_cast<double>(a);
    const double sign = (a / 2) % 2 == 0 ? 1.0 : -1.0;  // (-1)^(floor(a/2))
    const bool even = a % 2 == 0;

    double prev = 0.0, cur = m0;
    for (std::size_t n = 0; n + a < dim; ++n) {
      const double v = sign * cur;
      if (even)
        cosm.set_sym(n + a, n, v);
      else
        sinm.set_sym(n + a, n, v);
      // scaled recurrence to M_{n+1}
      const double nf = static_cast<double>(n);
      const double c1 = (2.0 * nf + 1.0 + af - x) / (nf + 1.0) *
                        std::sqrt((nf + 1.0) / (nf + 1.0 + af));
      const double c2 = n == 0 ? 0.0
                               : (nf + af) / (nf + 1.0) *
                                     std::sqrt((nf + 1.0) * nf / ((nf + 1.0 + af) * (nf + af)));
      const double next = c1 * cur - c2 * prev;
      prev = cur;
      cur = next;
    }
  }
}

// Antisymmetric matrix of (adag - a); i * n_zpf * (adag - a) is the charge
// operator.  Used only for the n_g term via the real-symmetric embedding.
std::vector<double> ladder_antisym(std::size_t dim) {
  std::vector<double> b(dim * dim, 0.0);
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    const double v = std::sqrt(static_cast<double>(n + 1));
    b[(n + 1) * dim + n] = v;   // adag
    b[n * dim + (n + 1)] = -v;  // -a
  }
  return b;
}

bool has_offset_charge(const FluxoniumParams& p) {
  const double frac = p.n_g - std::floor(p.n_g);
  return frac > 1e-14 && frac < 1.0 - 1e-14;
}

// Energies of H with the offset-charge term, via the real-symmetric
// embedding [[A, -B], [B, A]] of the Hermitian A + iB.  Each eigenvalue of
// the Hermitian matrix appears twice; we return the deduplicated ascending
// list.
std::vector<double> energies_with_ng(const FluxoniumParams& p, std::size_t dim) {
  const SymmetricMatrix A0 = fluxonium_hamiltonian_matrix(p, dim);
  const double nzpf = 1.0 / (2.0 * phi_zpf(p));
  const std::vector<double> lad = ladder_antisym(dim);

  SymmetricMatrix M(2 * dim);
  const double ng_const = 4.0 * p.E_C_GHz * p.n_g * p.n_g;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double a = A0(i, j) + (i == j ? ng_const : 0.0);
      // B = -8 E_C n_g n_zpf (adag - a); H = A + iB
      const double b = -8.0 * p.E_C_GHz * p.n_g * nzpf * lad[i * dim + j];
      M(i, j) = a;
      M(dim + i, dim + j) = a;
      M(dim + i, j) = b;
      M(i, dim + j) = -b;
    }
  }
  std::vector<double> doubled = symmetric_eigenvalues(M);
  std::vector<double> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < doubled.size(); i += 2) out.push_back(doubled[i]);
  return out;
}

std::vector<double> plain_energies(const FluxoniumParams& p, std::size_t dim) {
  if (has_offset_charge(p)) return energies_with_ng(p, dim);
  return symmetric_eigenvalues(fluxonium_hamiltonian_matrix(p, dim));
}

}  // namespace

SymmetricMatrix fluxonium_hamiltonian_matrix(const FluxoniumParams& p, std::size_t dim) {
  p.validate();
  const double pz = phi_zpf(p);
  const double w_lc = std::sqrt(8.0 * p.E_C_GHz * p.E_L_GHz);
  const double phiext = kTwoPi * p.phi_ext;

  SymmetricMatrix cosm(dim), sinm(dim), h(dim);
  displacement_cos_sin(dim, pz, cosm, sinm);

  // basis displaced to phi = -phiext: cos(phi) = cos(phiext)cos(t) + sin(phiext)sin(t)
  const double cphi = std::cos(phiext);
  const double sphi = std::sin(phiext);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j)
      h(i, j) = -p.E_J_GHz * (cphi * cosm(i, j) + sphi * sinm(i, j));
    h(i, i) += w_lc * (static_cast<double>(i) + 0.5);
  }
  return h;
}

EigenSolution eigensystem(const FluxoniumParams& p, const BasisConfig& basis, std::size_t k) {
  p.validate();
  basis.validate();
  if (k < 1 || k > basis.dimension / 3)
    throw ValidationError("eigensystem: need 1 <= k <= dimension/3");

  EigenSolution sol;
  sol.params = p;
  sol.basis = basis;

  const bool ng_active = has_offset_charge(p);
  EigenResult res = symmetric_eigen(fluxonium_hamiltonian_matrix(p, basis.dimension), k);
  sol.states = std::move(res.vectors);
  if (ng_active) {
    std::vector<double> e = energies_with_ng(p, basis.dimension);
    sol.energies_GHz.assign(e.begin(), e.begin() + static_cast<long>(k));
  } else {
    sol.energies_GHz = std::move(res.values);
  }

  if (basis.check_convergence) {
    std::vector<double> fine = plain_energies(p, 2 * basis.dimension);
    double drift = 0.0;
    for (std::size_t i = 0; i < k; ++i) drift = std::max(drift, std::abs(fine[i] - sol.energies_GHz[i]));
    if (drift >= 1e-6) {
      std::vector<double> coarse = sol.energies_GHz;
      fine.resize(k);
      throw ConvergenceError(
          "eigensystem: dimension-doubling shifted retained energies by " + std::to_string(drift) +
              " GHz; increase BasisConfig::dimension",
          coarse, fine);
    }
    sol.converged = true;
  }
  return sol;
}

double transition_frequency_GHz(const EigenSolution& sol, std::size_t a, std::size_t b) {
  if (b <= a || b >= sol.levels())
    throw ValidationError("transition_frequency: need a < b < levels()");
  return sol.energies_GHz[b] - sol.energies_GHz[a];
}

DispersionResult flux_dispersion(const FluxoniumParams& p, std::size_t a, std::size_t b,
                                 double step_Phi0, const BasisConfig& basis) {
  if (!(step_Phi0 >= 1e-6 && step_Phi0 <= 1e-2))
    throw ValidationError("flux_dispersion: step must lie in [1e-6, 1e-2]");
  BasisConfig fast = basis;
  fast.check_convergence = false;  // the four stencil solves share the caller's basis

  auto fab = [&](double phi) {
    FluxoniumParams q = p;
    q.phi_ext = phi;
    const EigenSolution s = eigensystem(q, fast, b + 1);
    return transition_frequency_GHz(s, a, b);
  };

  auto central = [&](double h) { return (fab(p.phi_ext + h) - fab(p.phi_ext - h)) / (2.0 * h); };

  DispersionResult out;
  out.value_GHz_per_Phi0 = central(step_Phi0);
  const double refined = central(0.5 * step_Phi0);
  const double denom = std::max(std::abs(refined), 1e-30);
  out.relative_shift = std::abs(refined - out.value_GHz_per_Phi0) / denom;
  // near sweet spots both estimates are ~0; compare against the frequency scale instead
  const double scale_floor = 1e-9 * std::max(1.0, std::abs(fab(p.phi_ext)));
  out.richardson_ok =
      out.relative_shift < 1e-3 || std::abs(refined - out.value_GHz_per_Phi0) < scale_floor;
  return out;
}

PhaseGrid wavefunctions_on_grid(const EigenSolution& sol, const GridSpec& grid) {
  if (grid.points < 16 || !(grid.half_width_pi > 0))
    throw ValidationError("wavefunctions_on_grid: bad grid spec");

  const FluxoniumParams& p = sol.params;
  const double losc = std::sqrt(2.0) * phi_zpf(p);
  const double phiext = kTwoPi * p.phi_ext;
  const std::size_t M = grid.points;
  const std::size_t dim = sol.states.empty() ? 0 : sol.states[0].size();
  const std::size_t k = sol.states.size();

  PhaseGrid out;
  out.half_width_pi = grid.half_width_pi;
  out.points = M;
  out.dphi = 2.0 * grid.half_width_pi * kPi / static_cast<double>(M);
  out.values.assign(k, std::vector<double>(M, 0.0));

  const double norm0 = std::pow(kPi, -0.25) / std::sqrt(losc);
  for (std::size_t i = 0; i < M; ++i) {
    const double phi = out.phi(i);
    const double y = (phi + phiext) / losc;
    double prev = 0.0;
    double cur = norm0 * std::exp(-0.5 * y * y);
    for (std::size_t n = 0; n < dim; ++n) {
      for (std::size_t s = 0; s < k; ++s) out.values[s][i] += sol.states[s][n] * cur;
      const double nf = static_cast<double>(n);
      const double next = std::sqrt(2.0 / (nf + 1.0)) * y * cur - std::sqrt(nf / (nf + 1.0)) * prev;
      prev = cur;
      cur = next;
    }
  }

  for (std::size_t s = 0; s < k; ++s) {
    const auto& v = out.values[s];
    const double edge = std::max(std::abs(v.front()), std::abs(v.back()));
    if (edge >= 1e-8)
      throw ValidationError("wavefunctions_on_grid: boundary amplitude " + std::to_string(edge) +
                            " exceeds 1e-8; increase the grid half-width L");
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm -= 0.5 * (v.front() * v.front() + v.back() * v.back());
    norm *= out.dphi;
    if (std::abs(norm - 1.0) > 1e-6)
      throw ValidationError("wavefunctions_on_grid: state norm " + std::to_string(norm) +
                            " outside 1 +/- 1e-6");
  }
  return out;
}

std::vector<FluxSweepRow> spectrum_flux_sweep(FluxoniumParams p, double phi_start, double phi_end,
                                              std::size_t npoints, const BasisConfig& basis,
                                              unsigned threads) {
  if (npoints < 2) throw ValidationError("spectrum_flux_sweep: need at least 2 points");
  std::vector<FluxSweepRow> rows(npoints);
  const double step = (phi_end - phi_start) / static_cast<double>(npoints - 1);
  parallel_for_index(npoints, threads, [&](std::size_t i) {
    FluxoniumParams q = p;
    q.phi_ext = phi_start + step * static_cast<double>(i);
    const EigenSolution s = eigensystem(q, basis, 3);
    rows[i] = {q.phi_ext, transition_frequency_GHz(s, 0, 1), transition_frequency_GHz(s, 0, 2),
               transition_frequency_GHz(s, 1, 2)};
  });
  return rows;
}

}  // namespace qslip
