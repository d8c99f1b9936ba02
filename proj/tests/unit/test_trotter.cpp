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
#include <algorithm>
#include <cmath>

#include "oracle.hpp"
#include "sykq/clustering.hpp"
#include "sykq/error.hpp"
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

Mat dense(const std::vector<WeightedPauli>& terms) {
  const auto dim = Eigen::Index{1} << terms.front().string.n();
  Mat m = Mat::Zero(dim, dim);
  for (const auto& t : terms) m += t.coeff * oracle::pauli(t.string.label()) * (t.string.phase() == 2 ? -1.0 : 1.0);
  return m;
}

Circuit cluster_step(const DiagonalizedCluster& d, int n, double dt) {
  Circuit c(n);
  c.append(d.clifford);
  c.append(synth_diagonal_evolution(d.diag_terms, n, dt));
  c.append(inverse(d.clifford));
  return c;
}

std::vector<WeightedPauli> cluster_terms(const Hamiltonian& h, const std::vector<std::size_t>& idx) {
  std::vector<WeightedPauli> t;
  for (auto i : idx) t.push_back(h.sum()[i]);
  return t;
}

}  // namespace

TEST_CASE("worked cluster diagonalization") {
  const double a1 = 0.3, a11 = -0.8, a14 = 0.55;
  const std::vector<WeightedPauli> h1{
      {PauliString::parse("IZZ"), a1}, {PauliString::parse("ZXX"), a11}, {PauliString::parse("ZYY"), a14}};
  const auto d = diagonalize_cluster(h1, 3);
  std::map<std::string, double> got;
  for (const auto& t : d.diag_terms) got[t.string.label()] += t.string.phase() == 2 ? -t.coeff : t.coeff;
  CHECK(got.size() == 3);
  CHECK(got["IZI"] == Catch::Approx(a1));
  CHECK(got["ZIZ"] == Catch::Approx(a11));
  CHECK(got["ZZZ"] == Catch::Approx(-a14));
  CHECK(count_kind(d.clifford, GateKind::CX) == 1);
  CHECK(count_kind(d.clifford, GateKind::H) == 1);
  CHECK(d.clifford.size() == 2);
  CHECK(d.ladder_cx == 4);
  CHECK(d.two_qubit_cost() == 6);
  CHECK(diagonal_ladder_cost(d.diag_terms, 3) == 4);
  const Mat err = circuit_unitary(cluster_step(d, 3, 0.9)) - oracle::expm_i(dense(h1), 0.9);
  CHECK(err.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("trivial diagonalizations") {
  const auto flat = diagonalize_cluster({{PauliString::parse("ZZI"), 1.0}, {PauliString::parse("IZZ"), 2.0}}, 3);
  CHECK(flat.clifford.size() == 0);
  const auto x = diagonalize_cluster({{PauliString::parse("X"), 1.0}}, 1);
  REQUIRE(x.clifford.size() == 1);
  CHECK(x.clifford.gates[0] == Gate::h(0));
  CHECK(x.diag_terms[0].string == PauliString::parse("Z"));
  CHECK_THROWS_AS(diagonalize_cluster({{PauliString::parse("X"), 1.0}, {PauliString::parse("Z"), 1.0}}, 1),
                  ContractViolation);
}

TEST_CASE("diagonal synthesis") {
  const auto one = synth_diagonal_evolution({{PauliString::parse("IZI"), 0.4}}, 3, 0.5);
  REQUIRE(one.size() == 1);
  CHECK(one.gates[0].kind == GateKind::Rz);
  CHECK(one.gates[0].q[0] == 1);
  CHECK(one.gates[0].theta == Catch::Approx(2 * 0.4 * 0.5));
  for (int nu = 1; nu <= 5; ++nu) {
    std::string s(5, 'I');
    for (int q = 0; q < nu; ++q) s[static_cast<std::size_t>(q)] = 'Z';
    CHECK(two_qubit_count(synth_diagonal_evolution({{PauliString::parse(s), 1.0}}, 5, 0.1)) ==
          static_cast<std::size_t>(2 * (nu - 1)));
  }
  CHECK_THROWS_AS(synth_diagonal_evolution({{PauliString::parse("XZ"), 1.0}}, 2, 0.1), ContractViolation);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<WeightedPauli> terms;
    for (int k = 0; k < 6; ++k) {
      std::string s = oracle::random_letters(rng, 4);
      std::replace(s.begin(), s.end(), 'X', 'Z');
      std::replace(s.begin(), s.end(), 'Y', 'I');
      terms.push_back({PauliString::parse(s), static_cast<double>(rng() % 100) / 50.0 - 1.0});
    }
    const Mat want = oracle::expm_i(dense(terms), 0.3);
    REQUIRE(oracle::phase_distance(circuit_unitary(synth_diagonal_evolution(terms, 4, 0.3)), want) < 1e-10);
  }
}

TEST_CASE("every strategy diagonalizes SYK clusters exactly") {
  for (int N : {6, 8}) {
    const auto h = ham(N, 4);
    const auto p = dsatur_partition(build_graph(h.sum()));
    for (const auto& idx : p.clusters) {
      const auto terms = cluster_terms(h, idx);
      for (auto s : {DiagStrategy::Best, DiagStrategy::TableauHigh, DiagStrategy::TableauLow, DiagStrategy::FoldFirst,
                     DiagStrategy::FoldLast}) {
        const auto d = diagonalize_cluster(terms, h.n(), s);
        for (const auto& t : d.diag_terms) REQUIRE(t.string.is_diagonal());
        const Mat err = circuit_unitary(cluster_step(d, h.n(), 0.7)) - oracle::expm_i(dense(terms), 0.7);
        REQUIRE(err.cwiseAbs().maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("step gate counts") {
  const auto h6 = ham(6);
  const auto plan6 = plan_trotter(h6);
  for (const auto& c : plan6.clusters) CHECK(c.two_qubit_cost() == 6);
  CHECK(two_qubit_count(trotter_step(plan6, 1.5)) == 30);
  CHECK(two_qubit_count(trotter_step(ham(4), dsatur_partition(build_graph(ham(4).sum())), 1.5)) == 2);
}

TEST_CASE("hand partition of N=6 costs no more than the reference circuits") {
  const auto h = ham(6);
  const std::vector<std::vector<std::string>> groups{{"IZZ", "ZXX", "ZYY"},
                                                     {"XIX", "YXZ", "ZXY"},
                                                     {"XIY", "YIX", "ZIZ"},
                                                     {"XXZ", "YYZ", "ZZI"},
                                                     {"XYZ", "ZYX", "YIY"}};
  ClusterPartition p;
  for (const auto& g : groups) {
    std::vector<std::size_t> idx;
    for (const auto& label : g)
      for (std::size_t i = 0; i < h.sum().size(); ++i)
        if (h.sum().terms()[i].string == PauliString::parse(label)) idx.push_back(i);
    REQUIRE(idx.size() == g.size());
    p.clusters.push_back(idx);
  }
  REQUIRE(is_valid_partition(h.sum(), p));
  const auto plan = plan_trotter(h, p);
  const std::vector<std::size_t> expected{6, 6, 4, 6, 8};
  for (std::size_t k = 0; k < 4; ++k) CHECK(plan.clusters[k].two_qubit_cost() == expected[k]);
  CHECK(plan.clusters[4].two_qubit_cost() <= expected[4]);
}

TEST_CASE("N=8 step matches the reference per-cluster costs") {
  const auto plan = plan_trotter(ham(8));
  std::vector<std::size_t> per;
  for (const auto& c : plan.clusters) per.push_back(c.two_qubit_cost());
  std::sort(per.begin(), per.end());
  CHECK(per == std::vector<std::size_t>{14, 16, 18, 20, 20, 22});
  CHECK(two_qubit_count(trotter_step(plan, 1.5)) == 110);
}

TEST_CASE("trotter circuits") {
  const auto h = ham(6);
  const auto plan = plan_trotter(h);
  CHECK(trotter_circuit(plan, 1.5, 1).gates == trotter_step(plan, 1.5).gates);
  const auto c8 = trotter_circuit(plan, 12.0, 8);
  CHECK(two_qubit_count(c8) == 240);
  for (int r : {1, 3, 8}) CHECK(two_qubit_count(trotter_circuit(plan, 6.0, r)) == r * two_qubit_count(trotter_step(plan, 1.0)));
  CHECK(oracle::phase_distance(circuit_unitary(trotter_circuit(plan, 0.0, 2)), Mat::Identity(8, 8)) < 1e-14);
  CHECK_THROWS_AS(trotter_circuit(plan, 1.0, 0), ParameterError);
}

TEST_CASE("per-cluster evolution is exact") {
  for (int N : {6, 8}) {
    const auto h = ham(N, 2);
    const auto p = dsatur_partition(build_graph(h.sum()));
    const auto plan = plan_trotter(h, p);
    for (std::size_t k = 0; k < p.count(); ++k) {
      const Mat want = oracle::expm_i(dense(cluster_terms(h, p.clusters[k])), 1.5);
      CHECK(oracle::op_norm(circuit_unitary(cluster_step(plan.clusters[k], h.n(), 1.5)) - want) <= 1e-10);
    }
  }
}

TEST_CASE("first-order error scaling") {
  const auto h = ham(6, 1);
  const auto plan = plan_trotter(h);
  const Mat hm = dense(h.sum().terms());
  // Per-step error is second order in dt.
  for (double dt : {0.2, 0.1}) {
    const double e1 = oracle::op_norm(circuit_unitary(trotter_step(plan, dt)) - oracle::expm_i(hm, dt));
    const double e2 = oracle::op_norm(circuit_unitary(trotter_step(plan, dt / 2)) - oracle::expm_i(hm, dt / 2));
    CHECK(e1 / e2 >= 3.5);
    CHECK(e1 / e2 <= 4.5);
  }
  // Fixed total time: error falls as 1/r.
  const Mat exact = oracle::expm_i(hm, 3.0);
  double prev = 0.0;
  for (int r : {4, 8, 16, 32}) {
    const double e = oracle::op_norm(circuit_unitary(trotter_circuit(plan, 3.0, r)) - exact);
    if (prev > 0.0) {
      CHECK(prev / e >= 2.0 / 1.5);
      CHECK(prev / e <= 2.0 * 1.5);
    }
    prev = e;
  }
}

TEST_CASE("resource table rows") {
  const auto r4 = resource_row(4);
  CHECK(r4.strings == 1);
  CHECK(r4.clusters == 1);
  CHECK(r4.two_qubit == 2);
  const auto r10 = resource_row(10);
  CHECK(r10.strings == 210);
  CHECK(r10.clusters <= 1.15 * 23);
  CHECK(r10.two_qubit <= 1.15 * 498);
  CHECK(resource_row(20).strings == 4845);
  CHECK(resource_table(4, 8).size() == 3);
  CHECK_THROWS_AS(resource_table(8, 4), UsageError);
}

TEST_CASE("routed N=6 evolution on a three-qubit path") {
  const auto plan = plan_trotter(ham(6, 1));
  const auto evo = trotter_circuit(plan, 12.0, 8);
  REQUIRE(two_qubit_count(evo) == 240);
  const auto routed = route(evo, CouplingMap::from_spec("path3", 3));
  const std::size_t total = two_qubit_count(routed.circuit);
  CHECK(total == 240 + 3 * count_kind(routed.circuit, GateKind::SWAP));
  CHECK(total >= 240);
  CHECK(total <= 360);
}
