// Copyright 2026 The sykq Authors
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

#include "sykq/noise.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "sykq/error.hpp"

namespace sykq {
namespace {

// Single-qubit Pauli matrices indexed I, X, Y, Z.
const std::array<std::array<cplx, 4>, 4>& pauli_table() {
  static const std::array<std::array<cplx, 4>, 4> t{{
      {{1.0, 0.0, 0.0, 1.0}},
      {{0.0, 1.0, 1.0, 0.0}},
      {{0.0, cplx{0, -1}, cplx{0, 1}, 0.0}},
      {{1.0, 0.0, 0.0, -1.0}},
  }};
  return t;
}

void inject_2q(StateVector& s, int a, int b, std::uint64_t k) {
  const auto& t = pauli_table();
  const std::uint64_t pa = k >> 2, pb = k & 3U;
  if (pa) kernels::apply_1q(s.policy(), s.amps().data(), s.n(), a, t[pa].data());
  if (pb) kernels::apply_1q(s.policy(), s.amps().data(), s.n(), b, t[pb].data());
}

void inject_1q(StateVector& s, int a, std::uint64_t k) {
  kernels::apply_1q(s.policy(), s.amps().data(), s.n(), a, pauli_table()[k].data());
}

struct Event {
  std::size_t op;
  int which;  // 2: two-qubit Pauli, 1: single-qubit
  std::uint64_t pauli;
};

// Draws every error location of one trajectory up front.
std::vector<Event> draw_events(const std::vector<CompiledOp>& ops, const NoiseModel& noise, Rng& rng) {
  std::vector<Event> ev;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& op = ops[i];
    if (op.arity == 2 && noise.p2 > 0.0) {
      for (int r = 0; r < op.noise_repeats; ++r)
        if (rng.bernoulli(noise.p2)) ev.push_back({i, 2, 1 + rng.below(15)});
    } else if (op.arity == 1 && noise.p1 > 0.0) {
      if (rng.bernoulli(noise.p1)) ev.push_back({i, 1, 1 + rng.below(3)});
    }
  }
  return ev;
}

void run_with_events(StateVector& s, const std::vector<CompiledOp>& ops, const std::vector<Event>& ev) {
  std::size_t next = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto& op = ops[i];
    if (op.arity == 1) kernels::apply_1q(s.policy(), s.amps().data(), s.n(), op.q0, op.m.data());
    else if (op.arity == 2)
      kernels::apply_2q(s.policy(), s.amps().data(), s.n(), op.q0, op.q1, op.m.data());
    for (; next < ev.size() && ev[next].op == i; ++next) {
      if (ev[next].which == 2) inject_2q(s, op.q0, op.q1, ev[next].pauli);
      else inject_1q(s, op.q0, ev[next].pauli);
    }
  }
}

std::uint64_t sample_index(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.uniform() * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
}

std::vector<double> cumulative(const StateVector& s) {
  std::vector<double> cdf(s.dim());
  double acc = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) cdf[i] = acc += std::norm(s.amps()[i]);
  return cdf;
}

}  // namespace

void NoiseModel::validate() const {
  const auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob(p2) || !prob(p1)) throw ParameterError("noise probabilities must lie in [0, 1]");
  for (const auto& r : readout)
    if (!prob(r.p10) || !prob(r.p01)) throw ParameterError("readout probabilities must lie in [0, 1]");
}

StateVector apply_noisy_circuit(StateVector state, const Circuit& c, const NoiseModel& noise, Rng& rng) {
  noise.validate();
  if (c.width != state.n()) throw DimensionError("circuit width differs from state width");
  const auto ops = compile_ops(c);
  run_with_events(state, ops, draw_events(ops, noise, rng));
  return state;
}

std::uint64_t ShotCounts::count(const std::string& bits) const {
  const auto it = counts.find(bits);
  return it == counts.end() ? 0 : it->second;
}

double ShotCounts::frequency(const std::string& bits) const {
  return shots ? static_cast<double>(count(bits)) / static_cast<double>(shots) : 0.0;
}

std::string ShotCounts::to_text() const {
  std::string out;
  for (const auto& [bits, k] : counts) out += bits + " " + std::to_string(k) + "\n";
  return out;
}

ShotCounts ShotCounts::from_histogram(const std::vector<std::uint64_t>& hist, int n) {
  ShotCounts sc;
  sc.n = n;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (!hist[i]) continue;
    sc.counts[bitstring(i, n)] = hist[i];
    sc.shots += hist[i];
  }
  return sc;
}

std::uint64_t apply_readout(std::uint64_t index, int n, const std::vector<ReadoutError>& readout, Rng& rng) {
  if (readout.empty()) return index;
  if (static_cast<int>(readout.size()) != n) throw DimensionError("readout model needs one entry per qubit");
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    const auto& r = readout[static_cast<std::size_t>(q)];
    if (rng.bernoulli((index & bit) ? r.p01 : r.p10)) index ^= bit;
  }
  return index;
}

std::vector<std::uint64_t> sample_histogram(const StateVector& state, std::uint64_t shots,
                                            const std::vector<ReadoutError>& readout, Rng& rng) {
  if (shots < 1) throw ParameterError("shots must be >= 1");
  const auto cdf = cumulative(state);
  std::vector<std::uint64_t> hist(state.dim(), 0);
  for (std::uint64_t s = 0; s < shots; ++s)
    ++hist[apply_readout(sample_index(cdf, rng), state.n(), readout, rng)];
  return hist;
}

ShotCounts sample_measurements(const StateVector& state, std::uint64_t shots,
                               const std::vector<ReadoutError>& readout, Rng& rng) {
  return ShotCounts::from_histogram(sample_histogram(state, shots, readout, rng), state.n());
}

namespace {

struct ShotPlan {
  std::vector<CompiledOp> ops;
  std::vector<double> clean_cdf;
  int n;
};

std::uint64_t one_shot(const ShotPlan& plan, const NoiseModel& noise, std::uint64_t seed, std::uint64_t s) {
  Rng rng = Rng::stream(seed, s);
  const auto ev = draw_events(plan.ops, noise, rng);
  std::uint64_t idx;
  if (ev.empty()) {
    idx = sample_index(plan.clean_cdf, rng);
  } else {
    StateVector st(plan.n, ExecPolicy::Serial);
    run_with_events(st, plan.ops, ev);
    idx = sample_index(cumulative(st), rng);
  }
  return apply_readout(idx, plan.n, noise.readout, rng);
}

ShotPlan make_plan(const Circuit& c, const NoiseModel& noise) {
  noise.validate();
  ShotPlan plan{compile_ops(c), {}, c.width};
  StateVector clean(c.width, ExecPolicy::Serial);
  run_ops(clean, plan.ops);
  plan.clean_cdf = cumulative(clean);
  return plan;
}

}  // namespace

std::vector<std::uint64_t> noisy_shots(const Circuit& c, const NoiseModel& noise,
                                       std::uint64_t shots, std::uint64_t seed) {
  const ShotPlan plan = make_plan(c, noise);
  std::vector<std::uint64_t> outcome(shots);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(shots); ++s)
    outcome[static_cast<std::size_t>(s)] = one_shot(plan, noise, seed, static_cast<std::uint64_t>(s));
  std::vector<std::uint64_t> hist(std::size_t{1} << c.width, 0);
  for (std::uint64_t o : outcome) ++hist[o];
  return hist;
}

std::vector<std::uint64_t> noisy_shots_serial(const Circuit& c, const NoiseModel& noise,
                                              std::uint64_t shots, std::uint64_t seed) {
  const ShotPlan plan = make_plan(c, noise);
  std::vector<std::uint64_t> hist(std::size_t{1} << c.width, 0);
  for (std::uint64_t s = 0; s < shots; ++s) ++hist[one_shot(plan, noise, seed, s)];
  return hist;
}

}  // namespace sykq
