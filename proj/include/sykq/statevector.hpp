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
#include <cstdint>
#include <string>
#include <vector>

#include "sykq/circuit.hpp"
#include "sykq/kernels.hpp"
#include "sykq/pauli.hpp"
#include "sykq/syk.hpp"

namespace sykq {

/// Dense n-qubit state. Basis index bit n-1-q holds qubit q, so the bitstring
/// of an index reads qubit 0 first.
class StateVector {
 public:
  explicit StateVector(int n, ExecPolicy policy = ExecPolicy::Auto);
  static StateVector basis(int n, std::uint64_t index, ExecPolicy policy = ExecPolicy::Auto);
  /// Normalizes; throws ParameterError on a zero vector.
  static StateVector from_vector(const Eigen::VectorXcd& v, ExecPolicy policy = ExecPolicy::Auto);

  int n() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  ExecPolicy policy() const { return policy_; }
  void set_policy(ExecPolicy p) { policy_ = p; }

  std::vector<cplx>& amps() { return amps_; }
  const std::vector<cplx>& amps() const { return amps_; }
  cplx amplitude(std::uint64_t index) const { return amps_.at(index); }

  void apply(const Gate& g);
  void apply_1q(int q, const CMatrix& m);
  void apply_2q(int q0, int q1, const CMatrix& m);
  void apply_pauli(const PauliString& p);
  /// Dense unitary on all qubits.
  void apply_unitary(const CMatrix& u);

  double norm() const;
  std::vector<double> probabilities() const;
  double expectation(const PauliString& p) const;
  Eigen::VectorXcd to_vector() const;
  /// One "bitstring amplitude" line per nonzero amplitude.
  std::string dump(double cutoff = 1e-12) const;

 private:
  int n_;
  ExecPolicy policy_;
  std::vector<cplx> amps_;
};

std::string bitstring(std::uint64_t index, int n);

/// Gates with their matrices resolved once, for repeated simulation.
struct CompiledOp {
  int arity = 0;  // 0 = no-op
  int q0 = -1, q1 = -1;
  std::array<cplx, 16> m{};
  bool two_qubit_noise_site = false;
  int noise_repeats = 0;  // SWAP counts as three two-qubit gates
};
std::vector<CompiledOp> compile_ops(const Circuit& c);
void run_ops(StateVector& s, const std::vector<CompiledOp>& ops);

StateVector apply_circuit(StateVector state, const Circuit& c);
/// Dense unitary of a circuit (width <= kDenseLimit).
CMatrix circuit_unitary(const Circuit& c);

/// e^{-iHt} via the cached eigendecomposition.
CMatrix exact_propagator(const Hamiltonian& h, double t);
StateVector exact_evolve(const Hamiltonian& h, double t, const StateVector& state);

}  // namespace sykq
