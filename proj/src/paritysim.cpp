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

#include "qslip/paritysim.hpp"

#include <cmath>

#include "qslip/numerics/parallel.hpp"

namespace qslip {

void SimConfig::validate() const {
  if (islands < 2) throw ValidationError("SimConfig: need at least 2 islands");
  if (n_qp > islands) throw ValidationError("SimConfig: n_qp must not exceed the island count");
  if (!(tau_qp_s > 0.0 && dt_s > 0.0 && duration_s > 0.0))
    throw ValidationError("SimConfig: time scales must be positive");
  if (!(dt_s < tau_qp_s / 5.0))
    throw ValidationError("SimConfig: dt must resolve switching (dt < tau_qp/5)");
  if (steps() < 10000) throw ValidationError("SimConfig: need duration/dt >= 1e4 samples");
  if (realizations < 1) throw ValidationError("SimConfig: need at least one realization");
  if (trace_stride < 1) throw ValidationError("SimConfig: trace_stride must be >= 1");
  const double total = static_cast<double>(steps()) * static_cast<double>(realizations);
  if (total > max_total_samples)
    throw MemoryCapError("SimConfig: samples x realizations = " + std::to_string(total) +
                         " exceeds the configured cap of " + std::to_string(max_total_samples));
}

std::vector<std::uint32_t> ParityState::qp_counts(std::size_t islands) const {
  std::vector<std::uint32_t> counts(islands, 0);
  for (std::uint32_t p : qp_position) counts[p]++;
  return counts;
}

ChargeConfiguration ParityState::charge_configuration(std::size_t islands) const {
  const auto counts = qp_counts(islands);
  ChargeConfiguration cfg;
  cfg.offsets.resize(islands + 1, 0.0);
  for (std::size_t j = 0; j < islands; ++j) {
    double v = base_offsets[j] + 0.5 * static_cast<double>(counts[j]);
    cfg.offsets[j] = v - std::floor(v);
  }
  return cfg;
}

ParityState init_state(const SimConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  ParityState st;
  st.base_offsets.resize(cfg.islands);
  for (auto& v : st.base_offsets) v = rng.uniform();
  st.qp_position.resize(cfg.n_qp);
  for (auto& p : st.qp_position) p = static_cast<std::uint32_t>(rng.below(cfg.islands));
  return st;
}

namespace {

// Move callback: (qp_index, from_island, moved_right).
using MoveFn = std::function<void(std::size_t, std::uint32_t, bool)>;

// One dt for every quasiparticle, in stable qp order.  Tunneling is decided
// by a threshold compare on the raw 64-bit stream so the accept set is
// identical across platforms.
inline void advance_qps(std::vector<std::uint32_t>& pos, std::uint32_t islands,
                        std::uint64_t threshold, Rng& rng, const MoveFn& on_move) {
  for (std::size_t q = 0; q < pos.size(); ++q) {
    if (rng.next_u64() >= threshold) continue;
    const bool right = (rng.next_u64() >> 63) != 0;
    const std::uint32_t from = pos[q];
    pos[q] = right ? (from + 1 == islands ? 0 : from + 1) : (from == 0 ? islands - 1 : from - 1);
    if (on_move) on_move(q, from, right);
  }
}

std::uint64_t tunnel_threshold(const SimConfig& cfg) {
  const double p = 1.0 - std::exp(-cfg.dt_s / cfg.tau_qp_s);
  return static_cast<std::uint64_t>(p * 18446744073709551616.0 /* 2^64 */);
}

// Incremental Re/Im of E_CQPS / eps for a homogeneous array.  Junction
// j = m+1 carries phasor index m and encloses islands 0..m; a half-Cooper-
// pair charge step flips the sign of every enclosing phasor.  For the two
// non-wrap moves exactly one phasor flips; for the two ring-wrap moves all
// phasors except the last flip, which is O(1) through a global sign.
class PhasorSum {
 public:
  PhasorSum(const ParityState& st, std::size_t islands) : islands_(islands) {
    re_.resize(islands);
    im_.resize(islands);
    const auto counts = st.qp_counts(islands);
    double eta = 0.0;
    sum_ = {0.0, 0.0};
    for (std::size_t m = 0; m < islands; ++m) {
      eta += st.base_offsets[m] + 0.5 * static_cast<double>(counts[m]);
      const double ang = -kTwoPi * eta;
      re_[m] = std::cos(ang);
      im_[m] = std::sin(ang);
      sum_.first += re_[m];
      sum_.second += im_[m];
    }
    global_ = 1.0;
  }

  void apply_move(std::uint32_t from, bool right) {
    const std::uint32_t n = static_cast<std::uint32_t>(islands_);
    const bool wrap = (right && from == n - 1) || (!right && from == 0);
    if (wrap) {
      // flips phasors 0..n-2: S' = 2 * t_{n-1} - S with t the true phasor
      const double t_re = global_ * re_[n - 1];
      const double t_im = global_ * im_[n - 1];
      sum_.first = 2.0 * t_re - sum_.first;
      sum_.second = 2.0 * t_im - sum_.second;
      global_ = -global_;
      re_[n - 1] = -re_[n - 1];
      im_[n - 1] = -im_[n - 1];
    } else {
      const std::uint32_t m = right ? from : from - 1;
      sum_.first -= 2.0 * global_ * re_[m];
      sum_.second -= 2.0 * global_ * im_[m];
      re_[m] = -re_[m];
      im_[m] = -im_[m];
    }
    if (++events_since_refresh_ >= kRefreshInterval) refresh();
  }

  double real_sum() const { return sum_.first; }

  void refresh() {
    events_since_refresh_ = 0;
    double sr = 0.0, si = 0.0;
    for (std::size_t m = 0; m < islands_; ++m) {
      sr += re_[m];
      si += im_[m];
    }
    sum_ = {global_ * sr, global_ * si};
  }

 private:
  static constexpr std::uint64_t kRefreshInterval = 1u << 16;  // bounds fp drift
  std::size_t islands_;
  std::vector<double> re_, im_;
  std::pair<double, double> sum_;
  double global_ = 1.0;
  std::uint64_t events_since_refresh_ = 0;
};

}  // namespace

void step(ParityState& state, const SimConfig& cfg, Rng& rng) {
  if (state.base_offsets.size() != cfg.islands)
    throw ValidationError("step: state/config island mismatch");
  advance_qps(state.qp_position, static_cast<std::uint32_t>(cfg.islands), tunnel_threshold(cfg),
              rng, nullptr);
  state.time_s += cfg.dt_s;
}

TraceResult run(const SimConfig& cfg, unsigned threads) {
  cfg.validate();
  if (cfg.drift)
    throw ValidationError("run: offset-charge drift is not modeled; the hook ships disabled");

  const std::size_t steps_n = cfg.steps();
  const std::uint64_t threshold = tunnel_threshold(cfg);
  const Rng master(cfg.seed);

  TraceResult out;
  out.dt_s = cfg.dt_s;
  out.samples_per_realization = steps_n;
  out.trace_stride = cfg.trace_stride;
  out.eps_ps_GHz = cfg.eps_ps_GHz;
  if (cfg.keep_per_realization_psds) out.realization_psds.resize(cfg.realizations);

  // Realizations are independent; workers write only their own slot.  The
  // average is accumulated afterwards in realization order, so it is
  // bit-identical for any thread count.  Memory scales with the number of
  // simultaneously retained periodograms (waves of `threads`).
  std::vector<SpectralDensity> wave(cfg.keep_per_realization_psds
                                        ? cfg.realizations
                                        : std::max<std::size_t>(threads, 1));
  const std::size_t wave_size = wave.size();

  for (std::size_t base = 0; base < cfg.realizations; base += wave_size) {
    const std::size_t count = std::min(wave_size, cfg.realizations - base);
    parallel_for_index(count, threads, [&](std::size_t w) {
      const std::size_t r = base + w;
      Rng rng = master.split(r);

      // state drawn from the realization stream so every realization differs
      ParityState st;
      st.base_offsets.resize(cfg.islands);
      for (auto& v : st.base_offsets) v = rng.uniform();
      st.qp_position.resize(cfg.n_qp);
      for (auto& p : st.qp_position) p = static_cast<std::uint32_t>(rng.below(cfg.islands));

      PhasorSum phasors(st, cfg.islands);
      std::vector<double> trace(steps_n);
      auto on_move = [&](std::size_t, std::uint32_t from, bool right) {
        phasors.apply_move(from, right);
      };
      for (std::size_t t = 0; t < steps_n; ++t) {
        advance_qps(st.qp_position, static_cast<std::uint32_t>(cfg.islands), threshold, rng,
                    on_move);
        trace[t] = phasors.real_sum();
      }

      wave[w] = periodogram(trace, cfg.dt_s);
      if (r == 0) {
        out.trace.reserve((steps_n + cfg.trace_stride - 1) / cfg.trace_stride);
        for (std::size_t t = 0; t < steps_n; t += cfg.trace_stride) out.trace.push_back(trace[t]);
      }
    });

    for (std::size_t w = 0; w < count; ++w) {
      const std::size_t r = base + w;
      if (out.averaged_psd.values.empty()) {
        out.averaged_psd = wave[w];
        out.averaged_psd.estimator = "periodogram-mean";
      } else {
        for (std::size_t i = 0; i < out.averaged_psd.values.size(); ++i)
          out.averaged_psd.values[i] += wave[w].values[i];
      }
      if (cfg.keep_per_realization_psds) out.realization_psds[r] = std::move(wave[w]);
    }
  }

  const double inv = 1.0 / static_cast<double>(cfg.realizations);
  for (double& v : out.averaged_psd.values) v *= inv;
  return out;
}

}  // namespace qslip
