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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "oracle.hpp"
#include "sykq/error.hpp"
#include "sykq/mitigation.hpp"
#include "sykq/statevector.hpp"
#include "sykq/syk.hpp"
#include "sykq/trotter.hpp"

using namespace sykq;
using oracle::Mat;

namespace {

Hamiltonian ham(int N, std::uint64_t seed = 0) {
  SykParams p;
  p.N = N;
  p.seed = seed;
  return build_hamiltonian(sample_couplings(p));
}

bool preserves(GateKind gate, const TwirlEntry& e) {
  const Mat g = gate_matrix(Gate{gate, {0, 1}});
  const Mat before = oracle::kron(oracle::pauli2(e.ops[2]), oracle::pauli2(e.ops[3]));
  const Mat after = oracle::kron(oracle::pauli2(e.ops[0]), oracle::pauli2(e.ops[1]));
  return (after * g * before - static_cast<double>(e.sign) * g).cwiseAbs().maxCoeff() <= 1e-12;
}

}  // namespace

TEST_CASE("twirl tables regenerate by brute force") {
  for (auto gate : {GateKind::CX, GateKind::ECR}) {
    const auto t = generate_twirl_table(gate);
    REQUIRE(t.entries.size() == 16);
    CHECK(verify_twirl_table(t));
    std::set<std::string> distinct;
    for (const auto& e : t.entries) {
      CHECK(preserves(gate, e));
      distinct.insert(std::string(e.ops.begin(), e.ops.end()));
    }
    CHECK(distinct.size() == 16);
  }
  int survivors = 0;
  for (int code = 0; code < 256; ++code) {
    TwirlEntry e{{"IXYZ"[code >> 6], "IXYZ"[(code >> 4) & 3], "IXYZ"[(code >> 2) & 3], "IXYZ"[code & 3]}, 1};
    survivors += preserves(GateKind::ECR, e) || preserves(GateKind::ECR, TwirlEntry{e.ops, -1});
  }
  CHECK(survivors == 16);
}

TEST_CASE("reference ECR table") {
  const auto ref = reference_ecr_table();
  CHECK(ref.entries.size() == 16);
  CHECK(verify_twirl_table(ref));
  CHECK(ref.entries[0].str() == "IIII +");
  CHECK(ref.entries[2].str() == "XZXZ -");
  const auto gen = generate_twirl_table(GateKind::ECR);
  for (const auto& e : ref.entries) CHECK(std::find(gen.entries.begin(), gen.entries.end(), e) != gen.entries.end());
  CHECK_FALSE(verify_twirl_table(TwirlTable{GateKind::ECR, {{{'X', 'I', 'I', 'I'}, 1}}}));
  CHECK_FALSE(verify_twirl_table(TwirlTable{GateKind::CX, {{{'I', 'I', 'I', 'I'}, 1}}}));
}

TEST_CASE("twirled variants keep the noiseless distribution") {
  const auto plan = plan_trotter(ham(6, 1));
  const Circuit c = trotter_circuit(plan, 3.0, 2);
  const auto tables = std::vector<TwirlTable>{generate_twirl_table(GateKind::CX), generate_twirl_table(GateKind::ECR)};
  const auto ref = apply_circuit(StateVector(3), c).probabilities();
  Rng rng(5);
  for (int v = 0; v < 75; ++v) {
    const Circuit t = pauli_twirl(c, tables, rng);
    CHECK(two_qubit_count(t) == two_qubit_count(c));
    const auto p = apply_circuit(StateVector(3), t).probabilities();
    for (std::size_t i = 0; i < p.size(); ++i) REQUIRE(std::abs(p[i] - ref[i]) <= 1e-10);
    CHECK(oracle::phase_distance(circuit_unitary(t), circuit_unitary(c)) < 1e-10);
  }
  const Circuit e = rebase_to_ecr(c);
  const Circuit te = pauli_twirl(e, tables, rng);
  CHECK(oracle::phase_distance(circuit_unitary(te), circuit_unitary(c)) < 1e-10);

  Circuit plain(2);
  plain.add(Gate::h(0));
  plain.add(Gate::rz(1, 0.2));
  CHECK(pauli_twirl(plain, tables, rng).gates == plain.gates);
  Circuit sw(2);
  sw.add(Gate::swap(0, 1));
  CHECK_THROWS_AS(pauli_twirl(sw, tables, rng), UnsupportedGateError);
}

TEST_CASE("depolarizing inversion") {
  CHECK(invert_depolarizing(0.5275, 0.3, 3) == Catch::Approx(0.7));
  CHECK(invert_depolarizing(0.42, 0.0, 3) == 0.42);
  for (double p : {0.1, 0.5, 0.99}) CHECK(invert_depolarizing(0.125, p, 3) == Catch::Approx(0.125));
  CHECK_THROWS_AS(invert_depolarizing(0.5, 1.0, 3), SingularChannelError);
  std::mt19937_64 g(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = static_cast<double>(g() % 10000) / 10000.0, p = static_cast<double>(g() % 9999) / 10000.0;
    const int n = 1 + static_cast<int>(g() % 6);
    const double raw = (1.0 - p) * x + p * std::ldexp(1.0, -n);
    REQUIRE(invert_depolarizing(raw, p, n) == Catch::Approx(x).margin(1e-12));
  }
}

TEST_CASE("readout correction") {
  const std::vector<std::uint64_t> hist{500, 200, 200, 100};
  const auto id = readout_correct(hist, 2, {Eigen::Matrix2d::Identity(), Eigen::Matrix2d::Identity()});
  CHECK(id[0] == Catch::Approx(0.5));
  CHECK(id[3] == Catch::Approx(0.1));

  Rng rng(2);
  const std::uint64_t shots = 100000;
  const auto h0 = sample_histogram(StateVector(1), shots, {{0.1, 0.0}}, rng);
  const auto c0 = readout_correct(h0, 1, {confusion_matrix({0.1, 0.0})});
  CHECK(c0[0] == Catch::Approx(1.0).margin(5.0 * std::sqrt(0.09 / shots) / 0.9));

  const auto cm = confusion_matrix({0.05, 0.05});
  const auto flat = readout_correct({250, 250, 250, 250}, 2, {cm, cm});
  for (double v : flat) CHECK(v == Catch::Approx(0.25));
  CHECK_THROWS_AS(readout_correct(hist, 2, {confusion_matrix({0.5, 0.5}), cm}), SingularMatrixError);
}

TEST_CASE("self-mitigation limits") {
  const auto h = ham(6, 1);
  const auto plan = plan_trotter(h);
  const double noiseless = std::norm(apply_circuit(StateVector(3), trotter_circuit(plan, 6.0, 4)).amplitude(0));
  MitigationOptions opts;
  opts.n_twirls = 10;
  opts.shots = 1024;
  opts.seed = 3;

  const auto clean = self_mitigation(plan, 6.0, 4, NoiseModel{}, opts);
  CHECK(clean.p_hat == 0.0);
  CHECK(clean.mitigated == Catch::Approx(clean.raw));
  CHECK(std::abs(clean.raw - noiseless) <= 5.0 * std::sqrt(0.25 / (10 * 1024)));

  NoiseModel full;
  full.p2 = NoiseModel::kFullTwoQubit;
  const auto dead = self_mitigation(plan, 6.0, 4, full, opts);
  CHECK(std::abs(dead.raw - 0.125) <= 3.0 * dead.raw_stderr);

  CHECK_THROWS_AS(self_mitigation(plan, 4.5, 3, NoiseModel{}, opts), ParameterError);
  const MitigationOptions defaults;
  CHECK(defaults.n_twirls == 75);
  CHECK(defaults.shots == 2048);
  const auto j = clean.to_json();
  CHECK(j.contains("p_hat"));
  CHECK(j.contains("stderr"));
}

TEST_CASE("inversion recovers a synthetic global depolarizing channel") {
  // Shots come from (1-p) ideal + p uniform; the echo circuit's ideal P0 is 1.
  const double ideal = 0.37, p = 0.4;
  const int n = 3;
  const std::uint64_t shots = 2048;
  const int variants = 75;
  Rng rng(9);
  const auto sample = [&](double p0) {
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
      const bool noisy = rng.bernoulli(p);
      hits += noisy ? rng.below(8) == 0 : rng.bernoulli(p0);
    }
    return static_cast<double>(hits) / static_cast<double>(shots);
  };
  std::vector<double> raw(variants), echo(variants);
  for (int v = 0; v < variants; ++v) {
    raw[static_cast<std::size_t>(v)] = sample(ideal);
    echo[static_cast<std::size_t>(v)] = sample(1.0);
  }
  const auto estimate = [&](const std::vector<std::size_t>& idx) {
    double r = 0.0, e = 0.0;
    for (auto i : idx) {
      r += raw[i];
      e += echo[i];
    }
    r /= static_cast<double>(idx.size());
    e /= static_cast<double>(idx.size());
    return invert_depolarizing(r, (1.0 - e) / (1.0 - std::ldexp(1.0, -n)), n);
  };
  std::vector<std::size_t> all(variants);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const double m = estimate(all);
  double s1 = 0.0, s2 = 0.0;
  for (int b = 0; b < 400; ++b) {
    std::vector<std::size_t> idx(variants);
    for (auto& i : idx) i = rng.below(variants);
    const double x = estimate(idx);
    s1 += x;
    s2 += x * x;
  }
  const double sd = std::sqrt(s2 / 400 - (s1 / 400) * (s1 / 400));
  CHECK(std::abs(m - ideal) <= 3.0 * sd);
}

TEST_CASE("twirled local noise is close to one global depolarizing factor") {
  const auto plan = plan_trotter(ham(6, 1));
  const Circuit c = trotter_step(plan, 1.5);
  const auto tables = std::vector<TwirlTable>{generate_twirl_table(GateKind::CX)};
  NoiseModel noise;
  noise.p2 = 0.005;
  const StateVector ideal_state = apply_circuit(StateVector(3), c);
  std::vector<PauliString> obs;
  std::vector<double> ideal;
  for (int code = 1; code < 64; ++code) {
    const auto p = PauliString(3, static_cast<std::uint64_t>(code & 7), static_cast<std::uint64_t>(code >> 3));
    const double v = ideal_state.expectation(p);
    if (std::abs(v) >= 0.5) {
      obs.push_back(p);
      ideal.push_back(v);
    }
  }
  REQUIRE(obs.size() >= 3);
  const int M = 10000;
  std::vector<double> noisy(obs.size(), 0.0);
  for (int m = 0; m < M; ++m) {
    Rng rng = Rng::stream(31, static_cast<std::uint64_t>(m));
    const Circuit t = pauli_twirl(c, tables, rng);
    const StateVector s = apply_noisy_circuit(StateVector(3), t, noise, rng);
    for (std::size_t k = 0; k < obs.size(); ++k) noisy[k] += s.expectation(obs[k]) / M;
  }
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < obs.size(); ++k) {
    num += noisy[k] * ideal[k];
    den += ideal[k] * ideal[k];
  }
  const double keep = num / den;
  CHECK(keep < 1.0);
  for (std::size_t k = 0; k < obs.size(); ++k) CHECK(std::abs(noisy[k] - keep * ideal[k]) <= 0.05 * std::abs(ideal[k]));
}
