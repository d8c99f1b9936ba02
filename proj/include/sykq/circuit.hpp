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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sykq/pauli.hpp"

namespace sykq {

enum class GateKind { H, S, Sdg, X, Y, Z, Rz, CX, ECR, SWAP, Barrier, Measure };

std::string_view gate_name(GateKind k);
/// Operand count: 0 for Barrier (spans all qubits), 2 for CX/ECR/SWAP, else 1.
int gate_arity(GateKind k);
bool is_two_qubit(GateKind k);

struct Gate {
  GateKind kind = GateKind::Barrier;
  std::array<int, 2> q{-1, -1};
  double theta = 0.0;  // Rz angle; Rz(t) = exp(-i t/2 Z)

  static Gate h(int a) { return {GateKind::H, {a, -1}}; }
  static Gate s(int a) { return {GateKind::S, {a, -1}}; }
  static Gate sdg(int a) { return {GateKind::Sdg, {a, -1}}; }
  static Gate x(int a) { return {GateKind::X, {a, -1}}; }
  static Gate y(int a) { return {GateKind::Y, {a, -1}}; }
  static Gate z(int a) { return {GateKind::Z, {a, -1}}; }
  static Gate rz(int a, double t) { return {GateKind::Rz, {a, -1}, t}; }
  static Gate cx(int c, int t) { return {GateKind::CX, {c, t}}; }
  static Gate ecr(int a, int b) { return {GateKind::ECR, {a, b}}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, {a, b}}; }
  static Gate barrier() { return {GateKind::Barrier, {-1, -1}}; }
  static Gate measure(int a) { return {GateKind::Measure, {a, -1}}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// 2x2 or 4x4 unitary. For two-qubit gates q[0] is the left (most
/// significant) factor.
CMatrix gate_matrix(const Gate& g);

struct Circuit {
  int width = 1;
  std::vector<Gate> gates;
  std::string name;
  double dt = 0.0;
  int steps = 0;

  Circuit() = default;
  explicit Circuit(int w) : width(w) {}

  void add(const Gate& g);
  void append(const Circuit& other);
  /// Throws DimensionError or ParameterError on a malformed gate.
  void validate() const;
  std::size_t size() const { return gates.size(); }
};

/// Reverse order, S <-> Sdg, Rz angles negated.
Circuit inverse(const Circuit& c);
/// CX + ECR + 3 * SWAP.
std::size_t two_qubit_count(const Circuit& c);
std::size_t count_kind(const Circuit& c, GateKind k);

/// U P U^dagger for a Clifford gate U; exact phase.
PauliString conjugate(const PauliString& p, const Gate& g);
/// Conjugation by the whole circuit (gates in application order).
PauliString conjugate(const PauliString& p, const Circuit& c);

/// Each CX(c,t) becomes S,H on c and H,S,X on t, then ECR(c,t), then H on both.
Circuit rebase_to_ecr(const Circuit& c);

std::string export_qasm2(const Circuit& c);
/// Reads the subset export_qasm2 writes.
Circuit parse_qasm2(std::string_view text);

/// Undirected physical connectivity.
class CouplingMap {
 public:
  CouplingMap() = default;
  CouplingMap(int n, std::vector<std::array<int, 2>> edges);

  static CouplingMap line(int n);
  static CouplingMap all_to_all(int n);
  /// Path of three on a heavy-hex patch, plus extra dangling qubits.
  static CouplingMap tee();
  /// "a b" per line; '#' starts a comment.
  static CouplingMap from_edge_list(std::string_view text);
  /// line<k> / path<k>, all, tee, or a path to an edge-list file.
  static CouplingMap from_spec(std::string_view spec, int n);

  int size() const { return n_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  bool adjacent(int a, int b) const;
  /// Shortest path a..b (inclusive); empty when unreachable.
  std::vector<int> path(int a, int b) const;
  int distance(int a, int b) const;

 private:
  int n_ = 0;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> dist_;  // n*n, -1 when unreachable
};

struct RoutedCircuit {
  Circuit circuit;                  // physical qubit indices
  std::vector<int> initial_layout;  // virtual -> physical
  std::vector<int> final_layout;
};

/// Greedy shortest-path SWAP insertion with one gate of look-ahead. The
/// identity layout is used initially.
RoutedCircuit route(const Circuit& c, const CouplingMap& map);

}  // namespace sykq
