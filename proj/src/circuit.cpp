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

#include "sykq/circuit.hpp"

#include <cmath>

#include "sykq/error.hpp"

namespace sykq {

std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::Rz: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::ECR: return "ecr";
    case GateKind::SWAP: return "swap";
    case GateKind::Barrier: return "barrier";
    case GateKind::Measure: return "measure";
  }
  return "?";
}

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::Barrier: return 0;
    case GateKind::CX:
    case GateKind::ECR:
    case GateKind::SWAP: return 2;
    default: return 1;
  }
}

bool is_two_qubit(GateKind k) { return gate_arity(k) == 2; }

CMatrix gate_matrix(const Gate& g) {
  using namespace std::complex_literals;
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix m;
  switch (g.kind) {
    case GateKind::H: m.resize(2, 2); m << r, r, r, -r; break;
    case GateKind::S: m.resize(2, 2); m << 1, 0, 0, 1i; break;
    case GateKind::Sdg: m.resize(2, 2); m << 1, 0, 0, -1i; break;
    case GateKind::X: m.resize(2, 2); m << 0, 1, 1, 0; break;
    case GateKind::Y: m.resize(2, 2); m << 0, -1i, 1i, 0; break;
    case GateKind::Z: m.resize(2, 2); m << 1, 0, 0, -1; break;
    case GateKind::Rz:
      m.resize(2, 2);
      m << std::exp(-0.5i * g.theta), 0, 0, std::exp(0.5i * g.theta);
      break;
    case GateKind::CX:
      m = CMatrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      break;
    case GateKind::SWAP:
      m = CMatrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      break;
    case GateKind::ECR: {
      CMatrix ix = PauliString::parse("IX").to_matrix();
      CMatrix xy = PauliString::parse("XY").to_matrix();
      m = r * (ix - xy);
      break;
    }
    default:
      throw UnsupportedGateError(std::string("no matrix for ") + std::string(gate_name(g.kind)));
  }
  return m;
}

namespace {

void check_gate(const Gate& g, int width) {
  const int k = gate_arity(g.kind);
  for (int i = 0; i < k; ++i)
    if (g.q[static_cast<std::size_t>(i)] < 0 || g.q[static_cast<std::size_t>(i)] >= width)
      throw DimensionError("gate operand outside circuit width");
  if (k == 2 && g.q[0] == g.q[1]) throw ParameterError("two-qubit gate with repeated operand");
  if (!std::isfinite(g.theta)) throw ParameterError("non-finite rotation angle");
}

}  // namespace

void Circuit::add(const Gate& g) {
  check_gate(g, width);
  gates.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.width != width) throw DimensionError("appending circuits of different width");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

void Circuit::validate() const {
  if (width < 1) throw DimensionError("circuit width must be >= 1");
  for (const auto& g : gates) check_gate(g, width);
}

Circuit inverse(const Circuit& c) {
  Circuit out = c;
  out.gates.assign(c.gates.rbegin(), c.gates.rend());
  for (auto& g : out.gates) {
    switch (g.kind) {
      case GateKind::S: g.kind = GateKind::Sdg; break;
      case GateKind::Sdg: g.kind = GateKind::S; break;
      case GateKind::Rz: g.theta = -g.theta; break;
      case GateKind::ECR: break;  // ECR is self-inverse
      case GateKind::Measure: throw ContractViolation("cannot invert a measurement");
      default: break;
    }
  }
  return out;
}

std::size_t count_kind(const Circuit& c, GateKind k) {
  std::size_t n = 0;
  for (const auto& g : c.gates) n += g.kind == k;
  return n;
}

std::size_t two_qubit_count(const Circuit& c) {
  std::size_t n = 0;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::CX || g.kind == GateKind::ECR) n += 1;
    else if (g.kind == GateKind::SWAP) n += 3;
  }
  return n;
}

namespace {

int bit(std::uint64_t m, int q) { return static_cast<int>((m >> q) & 1U); }
std::uint64_t flip(std::uint64_t m, int q, int on) {
  return on ? m ^ (std::uint64_t{1} << q) : m;
}

// Conjugation of a Pauli by a two-qubit unitary via its 4x4 matrix.
PauliString conjugate_dense(const PauliString& p, const Gate& g) {
  const int a = g.q[0], b = g.q[1];
  const std::uint64_t lx = static_cast<std::uint64_t>(bit(p.x(), a) | (bit(p.x(), b) << 1));
  const std::uint64_t lz = static_cast<std::uint64_t>(bit(p.z(), a) | (bit(p.z(), b) << 1));
  const CMatrix u = gate_matrix(g);
  const CMatrix img = u * PauliString(2, lx, lz).to_matrix() * u.adjoint();
  for (std::uint64_t x = 0; x < 4; ++x)
    for (std::uint64_t z = 0; z < 4; ++z) {
      const CMatrix cand = PauliString(2, x, z).to_matrix();
      const cplx tr = (cand.adjoint() * img).trace() / 4.0;
      if (std::abs(std::abs(tr) - 1.0) > 1e-9) continue;
      int k = 0;
      while (std::abs(i_pow(k) - tr) > 1e-9) ++k;
      std::uint64_t nx = p.x() & ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
      std::uint64_t nz = p.z() & ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
      nx |= ((x & 1) << a) | (((x >> 1) & 1) << b);
      nz |= ((z & 1) << a) | (((z >> 1) & 1) << b);
      return {p.n(), nx, nz, p.phase() + k};
    }
  throw UnsupportedGateError("gate is not Clifford");
}

}  // namespace

PauliString conjugate(const PauliString& p, const Gate& g) {
  std::uint64_t x = p.x(), z = p.z();
  int ph = p.phase();
  const int a = g.q[0], b = g.q[1];
  if (gate_arity(g.kind) >= 1 && (a < 0 || a >= p.n())) throw DimensionError("gate outside Pauli width");
  if (gate_arity(g.kind) == 2 && (b < 0 || b >= p.n())) throw DimensionError("gate outside Pauli width");
  switch (g.kind) {
    case GateKind::H: {
      const int xa = bit(x, a), za = bit(z, a);
      if (xa & za) ph += 2;
      x = flip(x, a, xa ^ za);
      z = flip(z, a, xa ^ za);
      break;
    }
    case GateKind::S:
      if (bit(x, a)) {
        if (bit(z, a)) ph += 2;
        z = flip(z, a, 1);
      }
      break;
    case GateKind::Sdg:
      if (bit(x, a)) {
        if (!bit(z, a)) ph += 2;
        z = flip(z, a, 1);
      }
      break;
    case GateKind::X: ph += 2 * bit(z, a); break;
    case GateKind::Y: ph += 2 * (bit(x, a) ^ bit(z, a)); break;
    case GateKind::Z: ph += 2 * bit(x, a); break;
    case GateKind::Rz:
      if (bit(x, a) && g.theta != 0.0) throw UnsupportedGateError("Rz is not Clifford");
      break;
    case GateKind::CX: {
      const int xc = bit(x, a), zc = bit(z, a), xt = bit(x, b), zt = bit(z, b);
      if (xc & zt & (xt ^ zc ^ 1)) ph += 2;
      x = flip(x, b, xc);
      z = flip(z, a, zt);
      break;
    }
    case GateKind::SWAP: {
      const int xa = bit(x, a), za = bit(z, a), xb = bit(x, b), zb = bit(z, b);
      x = flip(flip(x, a, xa ^ xb), b, xa ^ xb);
      z = flip(flip(z, a, za ^ zb), b, za ^ zb);
      break;
    }
    case GateKind::ECR: return conjugate_dense(p, g);
    case GateKind::Barrier: break;
    case GateKind::Measure: throw UnsupportedGateError("cannot conjugate through a measurement");
  }
  return {p.n(), x, z, ph};
}

PauliString conjugate(const PauliString& p, const Circuit& c) {
  PauliString out = p;
  for (const auto& g : c.gates) out = conjugate(out, g);
  return out;
}

Circuit rebase_to_ecr(const Circuit& c) {
  Circuit out = c;
  out.gates.clear();
  out.gates.reserve(c.gates.size());
  for (const auto& g : c.gates) {
    if (g.kind != GateKind::CX) {
      out.add(g);
      continue;
    }
    const int a = g.q[0], b = g.q[1];
    out.add(Gate::s(a));
    out.add(Gate::h(a));
    out.add(Gate::h(b));
    out.add(Gate::s(b));
    out.add(Gate::x(b));
    out.add(Gate::ecr(a, b));
    out.add(Gate::h(a));
    out.add(Gate::h(b));
  }
  return out;
}

}  // namespace sykq
