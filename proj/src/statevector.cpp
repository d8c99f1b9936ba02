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

#include "sykq/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstdio>

#include "sykq/error.hpp"

namespace sykq {

StateVector::StateVector(int n, ExecPolicy policy) : n_(n), policy_(policy) {
  if (n < 1 || n > 30) throw CapacityError("state vector width must be in [1, 30]");
  amps_.assign(std::size_t{1} << n, cplx{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int n, std::uint64_t index, ExecPolicy policy) {
  StateVector s(n, policy);
  if (index >= s.dim()) throw DimensionError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_vector(const Eigen::VectorXcd& v, ExecPolicy policy) {
  const auto dim = static_cast<std::uint64_t>(v.size());
  if (dim < 2 || !std::has_single_bit(dim)) throw DimensionError("vector length must be 2^n");
  const double nrm = v.norm();
  if (!(nrm > 0.0)) throw ParameterError("zero vector");
  StateVector s(std::countr_zero(dim), policy);
  for (std::uint64_t i = 0; i < dim; ++i) s.amps_[i] = v(static_cast<Eigen::Index>(i)) / nrm;
  return s;
}

void StateVector::apply_1q(int q, const CMatrix& m) {
  if (q < 0 || q >= n_) throw DimensionError("qubit out of range");
  const cplx mm[4] = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
  kernels::apply_1q(policy_, amps_.data(), n_, q, mm);
}

void StateVector::apply_2q(int q0, int q1, const CMatrix& m) {
  if (q0 < 0 || q0 >= n_ || q1 < 0 || q1 >= n_ || q0 == q1) throw DimensionError("bad qubit pair");
  cplx mm[16];
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) mm[4 * r + c] = m(r, c);
  kernels::apply_2q(policy_, amps_.data(), n_, q0, q1, mm);
}

void StateVector::apply(const Gate& g) {
  switch (gate_arity(g.kind)) {
    case 0: return;
    case 1:
      if (g.kind == GateKind::Measure) return;
      apply_1q(g.q[0], gate_matrix(g));
      return;
    default: apply_2q(g.q[0], g.q[1], gate_matrix(g));
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.n() != n_) throw DimensionError("Pauli width differs from state width");
  kernels::apply_pauli(policy_, amps_.data(), n_, qubit_to_index_mask(p.x(), n_),
                       qubit_to_index_mask(p.z(), n_), i_pow(p.phase() + p.y_count()));
}

void StateVector::apply_unitary(const CMatrix& u) {
  if (u.rows() != static_cast<Eigen::Index>(dim()) || u.cols() != u.rows())
    throw DimensionError("unitary size differs from state dimension");
  const Eigen::VectorXcd out = u * to_vector();
  for (std::size_t i = 0; i < dim(); ++i) amps_[i] = out(static_cast<Eigen::Index>(i));
}

double StateVector::norm() const { return std::sqrt(kernels::norm2(policy_, amps_.data(), n_)); }

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

double StateVector::expectation(const PauliString& p) const {
  StateVector t = *this;
  t.apply_pauli(p);
  cplx s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) s += std::conj(amps_[i]) * t.amps_[i];
  return s.real();
}

Eigen::VectorXcd StateVector::to_vector() const {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim()));
  for (std::size_t i = 0; i < dim(); ++i) v(static_cast<Eigen::Index>(i)) = amps_[i];
  return v;
}

std::string bitstring(std::uint64_t index, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q)
    if ((index >> (n - 1 - q)) & 1U) s[static_cast<std::size_t>(q)] = '1';
  return s;
}

std::string StateVector::dump(double cutoff) const {
  std::string out;
  char buf[96];
  for (std::size_t i = 0; i < dim(); ++i) {
    if (std::abs(amps_[i]) <= cutoff) continue;
    std::snprintf(buf, sizeof buf, " %+.12f %+.12fi\n", amps_[i].real(), amps_[i].imag());
    out += bitstring(i, n_) + buf;
  }
  return out;
}

std::vector<CompiledOp> compile_ops(const Circuit& c) {
  c.validate();
  std::vector<CompiledOp> ops;
  ops.reserve(c.gates.size());
  for (const auto& g : c.gates) {
    CompiledOp op;
    const int k = gate_arity(g.kind);
    if (k == 0 || g.kind == GateKind::Measure) {
      ops.push_back(op);
      continue;
    }
    const CMatrix m = gate_matrix(g);
    op.arity = k;
    op.q0 = g.q[0];
    op.q1 = g.q[1];
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index col = 0; col < m.cols(); ++col)
        op.m[static_cast<std::size_t>(r * m.cols() + col)] = m(r, col);
    op.two_qubit_noise_site = k == 2;
    op.noise_repeats = g.kind == GateKind::SWAP ? 3 : (k == 2 ? 1 : 0);
    ops.push_back(op);
  }
  return ops;
}

void run_ops(StateVector& s, const std::vector<CompiledOp>& ops) {
  for (const auto& op : ops) {
    if (op.arity == 1) kernels::apply_1q(s.policy(), s.amps().data(), s.n(), op.q0, op.m.data());
    else if (op.arity == 2)
      kernels::apply_2q(s.policy(), s.amps().data(), s.n(), op.q0, op.q1, op.m.data());
  }
}

StateVector apply_circuit(StateVector state, const Circuit& c) {
  if (c.width != state.n()) throw DimensionError("circuit width differs from state width");
  run_ops(state, compile_ops(c));
  return state;
}

CMatrix circuit_unitary(const Circuit& c) {
  if (c.width > kDenseLimit) throw CapacityError("circuit too wide for a dense unitary");
  const auto ops = compile_ops(c);
  const std::size_t dim = std::size_t{1} << c.width;
  CMatrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis(c.width, col, ExecPolicy::Serial);
    run_ops(s, ops);
    for (std::size_t r = 0; r < dim; ++r)
      u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) = s.amps()[r];
  }
  return u;
}

CMatrix exact_propagator(const Hamiltonian& h, double t) {
  const auto& e = h.eigenvalues();
  const auto& v = h.eigenvectors();
  Eigen::VectorXcd ph(e.size());
  for (Eigen::Index k = 0; k < e.size(); ++k) ph(k) = std::exp(cplx{0.0, -e(k) * t});
  return v * ph.asDiagonal() * v.adjoint();
}

StateVector exact_evolve(const Hamiltonian& h, double t, const StateVector& state) {
  if (state.n() != h.n()) throw DimensionError("state width differs from Hamiltonian width");
  const auto& e = h.eigenvalues();
  const auto& v = h.eigenvectors();
  Eigen::VectorXcd c = v.adjoint() * state.to_vector();
  for (Eigen::Index k = 0; k < e.size(); ++k) c(k) *= std::exp(cplx{0.0, -e(k) * t});
  StateVector out = state;
  const Eigen::VectorXcd r = v * c;
  for (std::size_t i = 0; i < out.dim(); ++i) out.amps()[i] = r(static_cast<Eigen::Index>(i));
  return out;
}

}  // namespace sykq
