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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sykq/pauli.hpp"

namespace sykq {

/// Node v stands for term `term_of[v]` of the source sum; u ~ v iff the two
/// terms anticommute.
struct AnticommutationGraph {
  std::vector<std::size_t> term_of;
  std::vector<std::vector<std::uint32_t>> adj;  // sorted neighbour lists

  std::size_t size() const { return adj.size(); }
  std::size_t edge_count() const;
};

/// Term indices sorted by (x_bits, z_bits).
std::vector<std::size_t> canonical_order(const PauliSum& sum);

/// Graph with nodes in canonical order. Rows are filled in parallel.
AnticommutationGraph build_graph(const PauliSum& sum);
AnticommutationGraph build_graph_serial(const PauliSum& sum);
/// Graph with nodes in the given order (term indices).
AnticommutationGraph build_graph(const PauliSum& sum, const std::vector<std::size_t>& order);

/// Clusters hold term indices, each listed in graph-node order.
struct ClusterPartition {
  std::vector<std::vector<std::size_t>> clusters;
  std::size_t count() const { return clusters.size(); }
};

/// Greedy DSatur: next node has maximal saturation, then maximal degree, then
/// smallest node index; it takes the smallest colour unused by neighbours.
ClusterPartition dsatur_partition(const AnticommutationGraph& g);

/// Checks disjointness, coverage and pairwise commutation.
bool is_valid_partition(const PauliSum& sum, const ClusterPartition& p);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational reduction_factor(const ClusterPartition& p, std::size_t m);

/// One line per cluster: "cluster k (size): P P P ...".
std::string dump_partition(const PauliSum& sum, const ClusterPartition& p);

}  // namespace sykq
