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

#ifndef QSLIP_ANALYSIS_HPP
#define QSLIP_ANALYSIS_HPP

#include <string>
#include <vector>

#include "qslip/numerics/psd.hpp"
#include "qslip/numerics/rng.hpp"
#include "qslip/spectrum.hpp"

namespace qslip {

/// One spectroscopy point: measured transition frequency at a flux bias.
struct SpectroscopyPoint {
  double phi_ext;
  std::size_t level_a = 0;
  std::size_t level_b = 1;
  double freq_GHz;
  double err_GHz = 1e-3;
};

struct SpectroscopyDataset {
  std::vector<SpectroscopyPoint> rows;

  /// Identifiability: >= 6 rows spanning >= 0.2 Phi0.
  void validate() const;
};

struct RamseyTrace {
  std::vector<double> delay_us;  ///< strictly increasing
  std::vector<double> signal;
  double T1_us = 0.0;  ///< externally measured, held fixed in fits
  double phi_ext = 0.0;
  std::string timestamp;

  void validate() const;
};

struct FrequencySeries {
  std::vector<double> time_s;   ///< lab time
  std::vector<double> f01_MHz;

  void validate() const;
  double median_dt_s() const;
};

struct SpectrumFit {
  double E_J_GHz = 0.0;
  double E_C_GHz = 0.0;
  double E_L_GHz = 0.0;
  double rms_residual_GHz = 0.0;
  int iterations = 0;
  bool converged = false;  ///< false when the residual exceeds the threshold
};

struct SpectrumFitOptions {
  BasisConfig basis{80, false};   ///< fit-grade basis; best fit is re-checked at full rigor
  int restarts = 6;
  RngSeed seed{20260810};
  double residual_threshold_GHz = 5e-3;
};

/// Least squares of eigensystem-predicted transitions against the dataset,
/// multi-start Nelder-Mead over (E_J, E_C, E_L).
SpectrumFit fit_spectrum(const SpectroscopyDataset& data, const FluxoniumParams& start,
                         const SpectrumFitOptions& opts = {});

struct RamseyFit {
  double T_phi_us = 0.0;
  double f_MHz = 0.0;
  double phi0_rad = 0.0;
  double amplitude = 0.0;
  double offset = 0.0;
  double rms_residual = 0.0;
  bool oscillation_detected = true;  ///< false: frequency was fitted unanchored
  bool t_phi_resolved = true;        ///< false: fitted T_phi >> trace span
};

/// Gaussian-decay Ramsey fit with T1 fixed to the measured value; the
/// frequency is initialized from the periodogram peak of the detrended
/// signal.  Requires >= 20 points.
RamseyFit fit_ramsey(const RamseyTrace& trace);

/// Periodogram of the mean-subtracted f01 series with dt = median sampling
/// interval.  Rejects gappy sampling (max gap / median > 1.5).
SpectralDensity frequency_psd(const FrequencySeries& series);

struct PowerLawFit {
  double M = 0.0;        ///< amplitude at 1 Hz, same units as the PSD
  double mu = 0.0;       ///< S(f) = M / f^mu
  double mu_err = 0.0;
  double log10M_err = 0.0;
  std::size_t bins_used = 0;
  std::size_t bins_excluded = 0;  ///< non-positive PSD bins in the band
};

/// Log-log linear regression of S(f) = M/f^mu over [f_lo, f_hi].
/// Requires >= 10 usable bins.
PowerLawFit fit_power_law(const SpectralDensity& psd, double f_lo_Hz, double f_hi_Hz);
PowerLawFit fit_power_law(const std::vector<double>& f_Hz, const std::vector<double>& S,
                          double f_lo_Hz, double f_hi_Hz);

/// A_Phi = sqrt(M) / |df01/dPhi|, with M from a fit of the f01 PSD in
/// MHz^2/Hz and the dispersion in GHz/Phi0; returns uPhi0/sqrt(Hz).
/// Zero dispersion is an error (sweet-spot data carries no flux-noise
/// information).
double flux_amplitude_from_psd(double M_MHz2_per_Hz, double dispersion_GHz_per_Phi0);

struct EchoRatePoint {
  double gamma_phiE_per_s;
  double dispersion_GHz_per_Phi0;
};

/// Least-squares slope through the origin of Gamma_phiE versus
/// 2 pi |df01/dPhi| sqrt(ln 2); returns A_Phi in uPhi0/sqrt(Hz).
/// Requires >= 3 rows away from sweet spots.
double flux_amplitude_from_echo(const std::vector<EchoRatePoint>& rows);

/// Spectral synthesis of a series with one-sided PSD M/f^mu (random phases,
/// amplitudes from the target PSD under this library's periodogram
/// convention).  n must be >= 4; mu = 0 gives white noise.
std::vector<double> synthesize_power_law(std::size_t n, double dt_s, double M, double mu,
                                         RngSeed seed);

/// Two-level random telegraph series (+/-1) with switching rate per second.
std::vector<double> synthesize_telegraph(std::size_t n, double dt_s, double rate_per_s,
                                         RngSeed seed);

}  // namespace qslip

#endif  // QSLIP_ANALYSIS_HPP
