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
#include <optional>
#include <string>
#include <vector>

#include "sykq/circuit.hpp"
#include "sykq/clustering.hpp"
#include "sykq/pauli.hpp"
#include "sykq/syk.hpp"

namespace sykq {

enum class DiagStrategy {
  Best,         // cheapest of the four below, ties in listed order
  TableauHigh,  // X-block elimination, pivot on the highest X column
  TableauLow,   // same, lowest X column
  FoldFirst,    // per-term folding onto its first free site
  FoldLast,     // per-term folding onto its last free site
};

std::string_view strategy_name(DiagStrategy s);

/// `clifford` is a circuit C with C P C^dagger diagonal for every input term
/// P; `diag_terms[k]` is the image of term k with its sign folded into the
/// coefficient.
struct DiagonalizedCluster {
  Circuit clifford;
  std::vector<WeightedPauli> diag_terms;
  DiagStrategy strategy = DiagStrategy::TableauHigh;
  std::size_t ladder_cx = 0;  // CX count of the diagonal block

  std::size_t two_qubit_cost() const { return 2 * two_qubit_count(clifford) + ladder_cx; }
};

/// Throws ContractViolation when two terms anticommute.
DiagonalizedCluster diagonalize_cluster(const std::vector<WeightedPauli>& terms, int n,
                                        DiagStrategy strategy = DiagStrategy::Best);

/// exp(-i dt sum_k c_k Z_k) with shared CX ladders. Identity terms only
/// contribute a global phase and are dropped.
Circuit synth_diagonal_evolution(const std::vector<WeightedPauli>& diag_terms, int n, double dt);
/// CX count synth_diagonal_evolution would emit.
std::size_t diagonal_ladder_cost(const std::vector<WeightedPauli>& diag_terms, int n);

struct TrotterPlan {
  int n = 0;
  std::vector<DiagonalizedCluster> clusters;
};

TrotterPlan plan_trotter(const Hamiltonian& h, const ClusterPartition& p,
                         DiagStrategy strategy = DiagStrategy::Best);
/// DSatur partition of h, then plan_trotter.
TrotterPlan plan_trotter(const Hamiltonian& h, DiagStrategy strategy = DiagStrategy::Best);

/// One Lie-Trotter step: for each cluster C, diagonal block, C^-1.
Circuit trotter_step(const TrotterPlan& plan, double dt);
Circuit trotter_step(const Hamiltonian& h, const ClusterPartition& p, double dt);
/// r steps with dt = t / r.
Circuit trotter_circuit(const TrotterPlan& plan, double t, int r);
Circuit trotter_circuit(const Hamiltonian& h, double t, int r);

struct ResourceRow {
  int N = 0;
  std::size_t strings = 0;
  std::size_t clusters = 0;
  std::size_t two_qubit = 0;
};

ResourceRow resource_row(int N, std::uint64_t seed = 0);
std::vector<ResourceRow> resource_table(int n_min, int n_max, std::uint64_t seed = 0);

}  // namespace sykq
