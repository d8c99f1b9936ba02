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

#include "sykq/clustering.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "sykq/error.hpp"

namespace sykq {

std::size_t AnticommutationGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj) twice += a.size();
  return twice / 2;
}

std::vector<std::size_t> canonical_order(const PauliSum& sum) {
  std::vector<std::size_t> order(sum.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& pa = sum[a].string;
    const auto& pb = sum[b].string;
    return pa.x() != pb.x() ? pa.x() < pb.x() : pa.z() < pb.z();
  });
  return order;
}

namespace {

AnticommutationGraph make_graph(const PauliSum& sum, const std::vector<std::size_t>& order,
                                bool parallel) {
  const std::size_t m = order.size();
  std::vector<std::uint64_t> xs(m), zs(m);
  for (std::size_t v = 0; v < m; ++v) {
    if (order[v] >= sum.size()) throw ParameterError("node order references missing term");
    xs[v] = sum[order[v]].string.x();
    zs[v] = sum[order[v]].string.z();
  }
  AnticommutationGraph g{order, std::vector<std::vector<std::uint32_t>>(m)};
  const auto row = [&](std::size_t u) {
    auto& a = g.adj[u];
    for (std::size_t v = 0; v < m; ++v)
      if (v != u && (std::popcount((xs[u] & zs[v]) ^ (zs[u] & xs[v])) & 1))
        a.push_back(static_cast<std::uint32_t>(v));
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t u = 0; u < static_cast<std::ptrdiff_t>(m); ++u)
      row(static_cast<std::size_t>(u));
  } else {
    for (std::size_t u = 0; u < m; ++u) row(u);
  }
  return g;
}

}  // namespace

AnticommutationGraph build_graph(const PauliSum& sum) {
  return make_graph(sum, canonical_order(sum), true);
}

AnticommutationGraph build_graph_serial(const PauliSum& sum) {
  return make_graph(sum, canonical_order(sum), false);
}

AnticommutationGraph build_graph(const PauliSum& sum, const std::vector<std::size_t>& order) {
  return make_graph(sum, order, true);
}

ClusterPartition dsatur_partition(const AnticommutationGraph& g) {
  const std::size_t m = g.size();
  ClusterPartition out;
  if (m == 0) return out;
  const std::size_t words = (m + 63) / 64;  // colours never exceed m
  std::vector<std::uint64_t> seen(m * words, 0);
  std::vector<int> sat(m, 0), colour(m, -1);
  int ncolours = 0;
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t best = m;
    for (std::size_t v = 0; v < m; ++v) {
      if (colour[v] >= 0) continue;
      if (best == m || sat[v] > sat[best] ||
          (sat[v] == sat[best] && g.adj[v].size() > g.adj[best].size()))
        best = v;
    }
    const std::uint64_t* row = &seen[best * words];
    int c = 0;
    while ((row[c / 64] >> (c % 64)) & 1U) ++c;
    colour[best] = c;
    ncolours = std::max(ncolours, c + 1);
    for (std::uint32_t u : g.adj[best]) {
      std::uint64_t& w = seen[u * words + static_cast<std::size_t>(c) / 64];
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      if (!(w & bit)) {
        w |= bit;
        ++sat[u];
      }
    }
  }
  out.clusters.resize(static_cast<std::size_t>(ncolours));
  for (std::size_t v = 0; v < m; ++v)
    out.clusters[static_cast<std::size_t>(colour[v])].push_back(g.term_of[v]);
  return out;
}

bool is_valid_partition(const PauliSum& sum, const ClusterPartition& p) {
  std::vector<char> used(sum.size(), 0);
  std::size_t total = 0;
  for (const auto& c : p.clusters) {
    if (c.empty()) return false;
    for (std::size_t i : c) {
      if (i >= sum.size() || used[i]) return false;
      used[i] = 1;
      ++total;
    }
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (!commutes(sum[c[a]].string, sum[c[b]].string)) return false;
  }
  return total == sum.size();
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational reduction_factor(const ClusterPartition& p, std::size_t m) {
  if (p.count() == 0) throw ParameterError("reduction factor of an empty partition");
  const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(p.count()));
  return {m / g, p.count() / g};
}

std::string dump_partition(const PauliSum& sum, const ClusterPartition& p) {
  std::ostringstream os;
  for (std::size_t k = 0; k < p.count(); ++k) {
    os << "cluster " << k << " (" << p.clusters[k].size() << "):";
    for (std::size_t i : p.clusters[k]) os << ' ' << sum[i].string.label();
    os << '\n';
  }
  return os.str();
}

}  // namespace sykq
