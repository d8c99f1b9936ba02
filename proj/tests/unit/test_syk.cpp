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

#include <bit>
#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "oracle.hpp"
#include "sykq/error.hpp"
#include "sykq/syk.hpp"

using namespace sykq;

namespace {

SykInstance inst(int N, std::uint64_t seed) {
  SykParams p;
  p.N = N;
  p.seed = seed;
  return sample_couplings(p);
}

// chi_i built from explicit strings: Z chain, then X (odd i) or Y (even i).
oracle::Mat chi(int i, int N) {
  const int k = (i + 1) / 2;
  std::string s;
  for (int q = 0; q < N / 2; ++q) s += q < k - 1 ? 'Z' : (q == k - 1 ? (i % 2 ? 'X' : 'Y') : 'I');
  return oracle::pauli(s) / std::sqrt(2.0);
}

}  // namespace

TEST_CASE("coupling counts and variance target") {
  CHECK(inst(6, 1).couplings.size() == 15);
  CHECK(inst(8, 1).couplings.size() == 70);
  for (int N : {6, 8, 10, 12}) {
    const double target = 6.0 / (N * N * N);
    for (std::uint64_t seed : {1, 2, 3}) {
      const auto c = inst(N, seed).couplings;
      const double m = static_cast<double>(c.size());
      double v = 0.0;
      for (const auto& x : c) v += x.value * x.value;
      v /= m;
      CHECK(std::abs(v - target) <= 4.0 * target * std::sqrt(2.0 / m));
    }
  }
  CHECK(6.0 / 216.0 == Catch::Approx(1.0 / 36.0));
}

TEST_CASE("couplings are deterministic and ordered") {
  const auto a = inst(8, 42), b = inst(8, 42);
  REQUIRE(a.couplings.size() == b.couplings.size());
  for (std::size_t i = 0; i < a.couplings.size(); ++i) {
    CHECK(a.couplings[i].idx == b.couplings[i].idx);
    CHECK(a.couplings[i].value == b.couplings[i].value);
    if (i > 0) CHECK(a.couplings[i - 1].idx < a.couplings[i].idx);
  }
  CHECK(inst(8, 43).couplings[0].value != a.couplings[0].value);
}

TEST_CASE("parameter validation") {
  SykParams p;
  p.N = 5;
  CHECK_THROWS_AS(sample_couplings(p), ParameterError);
  p.N = 2;
  CHECK_THROWS_AS(sample_couplings(p), ParameterError);
  CHECK_THROWS_AS(majorana_operator(7, 6), ParameterError);
  CHECK_THROWS_AS(majorana_operator(0, 6), ParameterError);
}

TEST_CASE("instance json round trip") {
  const auto a = inst(6, 9);
  const auto b = SykInstance::from_json(a.to_json());
  REQUIRE(b.couplings.size() == a.couplings.size());
  CHECK(b.couplings[3].value == a.couplings[3].value);
  CHECK(b.params.seed == 9);
  auto bad = a.to_json();
  bad["couplings"].erase(0);
  CHECK_THROWS_AS(SykInstance::from_json(bad), ParseError);
  CHECK_THROWS_AS(SykInstance::from_json(nlohmann::json::parse("{\"x\":1}")), ParseError);
}

TEST_CASE("majorana images") {
  const double s = 1.0 / std::sqrt(2.0);
  auto m = majorana_operator(1, 6);
  CHECK(m.string.label() == "XII");
  CHECK(m.scale == Catch::Approx(s));
  CHECK(majorana_operator(2, 6).string.label() == "YII");
  CHECK(majorana_operator(3, 6).string.label() == "ZXI");
  CHECK(majorana_operator(3, 6, true).scale == 1.0);
}

TEST_CASE("majorana anticommutators up to N=12") {
  for (int N = 2; N <= 12; N += 2) {
    const auto dim = Eigen::Index{1} << (N / 2);
    for (int i = 1; i <= N; ++i) {
      const auto a = majorana_operator(i, N);
      const oracle::Mat ci = a.scale * a.string.to_matrix();
      REQUIRE((ci - chi(i, N)).cwiseAbs().maxCoeff() < 1e-15);
      for (int j = 1; j <= N; ++j) {
        const auto b = majorana_operator(j, N);
        const oracle::Mat cj = b.scale * b.string.to_matrix();
        oracle::Mat ac = ci * cj + cj * ci;
        if (i == j) ac -= oracle::Mat::Identity(dim, dim);
        REQUIRE(ac.cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
}

TEST_CASE("hamiltonian equals the dense Majorana sum") {
  for (int N : {4, 6, 8}) {
    const auto in = inst(N, 3);
    const auto h = build_hamiltonian(in);
    const auto dim = Eigen::Index{1} << (N / 2);
    oracle::Mat ref = oracle::Mat::Zero(dim, dim);
    for (const auto& c : in.couplings)
      ref -= c.value * chi(c.idx[0], N) * chi(c.idx[1], N) * chi(c.idx[2], N) * chi(c.idx[3], N);
    CHECK((exact_matrix(h) - ref).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(h.sum().size() == choose(N, 4));
    for (const auto& t : h.sum().terms()) {
      CHECK(std::popcount(t.string.x()) % 2 == 0);
      CHECK(t.string.phase() == 0);
    }
  }
  CHECK(build_hamiltonian(inst(10, 1)).sum().size() == 210);
}

TEST_CASE("N=4 is a single ZZ term with quarter coupling") {
  SykInstance in;
  in.params.N = 4;
  in.couplings = {{{1, 2, 3, 4}, 1.0}};
  const auto h = build_hamiltonian(in);
  REQUIRE(h.sum().size() == 1);
  CHECK(h.sum()[0].string.label() == "ZZ");
  CHECK(h.sum()[0].coeff == Catch::Approx(0.25));
  in.params.unit_majorana = true;
  CHECK(std::abs(build_hamiltonian(in).sum()[0].coeff) == Catch::Approx(1.0));
  const auto& m = exact_matrix(h);
  CHECK(m.rows() == 4);
  CHECK((m - oracle::Mat(m.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("N=6 term set matches the fifteen strings") {
  const std::set<std::string> want{"IZZ", "XIX", "XIY", "XXZ", "XYZ", "YIX", "YIY", "YXZ",
                                   "YYZ", "ZIZ", "ZXX", "ZXY", "ZYX", "ZYY", "ZZI"};
  std::set<std::string> got;
  const auto h = build_hamiltonian(inst(6, 1));
  for (const auto& t : h.sum().terms()) got.insert(t.string.label());
  CHECK(got == want);
}

TEST_CASE("hamiltonians are hermitian and traceless") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto h = build_hamiltonian(inst(4 + 2 * static_cast<int>(s % 4), s));
    const auto& m = exact_matrix(h);
    CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(m.trace()) < 1e-12);
    CHECK(h.eigenvalues().size() == m.rows());
  }
  SykInstance z = inst(6, 1);
  for (auto& c : z.couplings) c.value = 0.0;
  CHECK(exact_matrix(build_hamiltonian(z)).cwiseAbs().maxCoeff() == 0.0);
}
