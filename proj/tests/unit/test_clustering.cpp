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

#include "sykq/clustering.hpp"
#include "sykq/syk.hpp"

using namespace sykq;

namespace {

PauliSum syk_sum(int N, std::uint64_t seed = 0) {
  SykParams p;
  p.N = N;
  p.seed = seed;
  return build_hamiltonian(sample_couplings(p)).sum();
}

std::vector<std::size_t> sizes(const ClusterPartition& p) {
  std::vector<std::size_t> s;
  for (const auto& c : p.clusters) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("graph examples") {
  const auto g4 = build_graph(syk_sum(4));
  CHECK(g4.size() == 1);
  CHECK(g4.edge_count() == 0);

  const auto s6 = syk_sum(6);
  const auto g6 = build_graph(s6);
  REQUIRE(g6.size() == 15);
  std::size_t a = 99, b = 99;
  for (std::size_t v = 0; v < g6.size(); ++v) {
    const auto l = s6[g6.term_of[v]].string.label();
    if (l == "IZZ") a = v;
    if (l == "ZXX") b = v;
  }
  REQUIRE(a < 15);
  REQUIRE(b < 15);
  CHECK(std::find(g6.adj[a].begin(), g6.adj[a].end(), b) == g6.adj[a].end());

  PauliSum toy(2);
  toy.add(PauliString::parse("XI"), 1.0);
  toy.add(PauliString::parse("ZI"), 1.0);
  CHECK(build_graph(toy).edge_count() == 1);
}

TEST_CASE("parallel and serial graphs agree") {
  for (int N : {6, 8, 12}) {
    const auto s = syk_sum(N);
    const auto a = build_graph(s), b = build_graph_serial(s);
    CHECK(a.adj == b.adj);
    CHECK(a.term_of == b.term_of);
  }
}

TEST_CASE("DSatur partitions") {
  const auto p6 = dsatur_partition(build_graph(syk_sum(6)));
  CHECK(sizes(p6) == std::vector<std::size_t>{3, 3, 3, 3, 3});
  const auto p8 = dsatur_partition(build_graph(syk_sum(8)));
  CHECK(sizes(p8) == std::vector<std::size_t>{8, 10, 12, 12, 14, 14});

  PauliSum flat(3);
  flat.add(PauliString::parse("ZZI"), 1.0);
  flat.add(PauliString::parse("IZZ"), 1.0);
  flat.add(PauliString::parse("ZIZ"), 1.0);
  CHECK(dsatur_partition(build_graph(flat)).count() == 1);
}

TEST_CASE("partitions are valid, covering and deterministic") {
  for (int N : {6, 8, 10, 12, 14}) {
    for (std::uint64_t seed : {0, 5}) {
      const auto s = syk_sum(N, seed);
      const auto p = dsatur_partition(build_graph(s));
      CHECK(is_valid_partition(s, p));
      std::vector<std::size_t> all;
      for (const auto& c : p.clusters) all.insert(all.end(), c.begin(), c.end());
      std::sort(all.begin(), all.end());
      REQUIRE(all.size() == s.size());
      for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == i);
      CHECK(dsatur_partition(build_graph(s)).clusters == p.clusters);
    }
  }
}

TEST_CASE("cluster counts against the resource table") {
  CHECK(dsatur_partition(build_graph(syk_sum(6))).count() == 5);
  CHECK(dsatur_partition(build_graph(syk_sum(8))).count() == 6);
  const std::pair<int, double> band[] = {{10, 23}, {12, 57}, {14, 92}, {16, 116}, {18, 175}, {20, 246}};
  for (const auto& [N, ref] : band) CHECK(dsatur_partition(build_graph(syk_sum(N))).count() <= 1.15 * ref);
}

TEST_CASE("reduction factors") {
  CHECK(reduction_factor(dsatur_partition(build_graph(syk_sum(6))), 15) == Rational{3, 1});
  const auto r8 = reduction_factor(dsatur_partition(build_graph(syk_sum(8))), 70);
  CHECK(r8 == Rational{35, 3});
  CHECK(r8.str() == "35/3");
  ClusterPartition one{{{0, 1, 2, 3}}};
  CHECK(reduction_factor(one, 4) == Rational{4, 1});
}

TEST_CASE("partition dump lists labels") {
  const auto s = syk_sum(6);
  const auto text = dump_partition(s, dsatur_partition(build_graph(s)));
  CHECK(text.rfind("cluster 0 (3):", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}
