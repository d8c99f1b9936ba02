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

#include "sykq/pauli.hpp"

#include <bit>
#include <cmath>

#include "sykq/error.hpp"

namespace sykq {
namespace {

void check_width(int n) {
  if (n < 0 || n > kMaxQubits)
    throw DimensionError("qubit count out of range: " + std::to_string(n));
}

void check_same(const PauliString& a, const PauliString& b) {
  if (a.n() != b.n())
    throw DimensionError("Pauli widths differ: " + std::to_string(a.n()) +
                         " vs " + std::to_string(b.n()));
}

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(int n) : n_(n) { check_width(n); }

PauliString::PauliString(int n, std::uint64_t x, std::uint64_t z, int phase)
    : n_(n), x_(x), z_(z), phase_(((phase % 4) + 4) % 4) {
  check_width(n);
  if ((x | z) & ~low_mask(n))
    throw DimensionError("Pauli mask exceeds " + std::to_string(n) + " qubits");
}

PauliString PauliString::parse(std::string_view s) {
  int phase = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    if (s[0] == '-') phase = 2;
    s.remove_prefix(1);
  }
  if (!s.empty() && s[0] == 'i') {
    phase += 1;
    s.remove_prefix(1);
  }
  std::uint64_t x = 0, z = 0;
  int q = 0;
  static constexpr std::string_view kOne = "\xF0\x9D\x9F\x99";  // U+1D7D9
  while (!s.empty()) {
    if (q >= kMaxQubits) throw DimensionError("Pauli string too long");
    if (s.substr(0, kOne.size()) == kOne) {
      s.remove_prefix(kOne.size());
      ++q;
      continue;
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (s[0]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Z': z |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      default:
        throw ParseError("bad Pauli character in '" + std::string(s) + "'");
    }
    s.remove_prefix(1);
    ++q;
  }
  if (q == 0) throw ParseError("empty Pauli string");
  return {q, x, z, phase};
}

PauliString PauliString::single(int n, int q, char op) {
  if (q < 0 || q >= n) throw DimensionError("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << q;
  switch (op) {
    case 'X': return {n, bit, 0};
    case 'Y': return {n, bit, bit};
    case 'Z': return {n, 0, bit};
    case 'I': return PauliString(n);
    default: throw ParameterError(std::string("bad Pauli kind ") + op);
  }
}

char PauliString::at(int q) const {
  const int b = static_cast<int>((x_ >> q) & 1U) | static_cast<int>(((z_ >> q) & 1U) << 1);
  return "IXZY"[b];
}

int PauliString::weight() const { return std::popcount(x_ | z_); }
int PauliString::y_count() const { return std::popcount(x_ & z_); }

std::string PauliString::label() const {
  std::string out(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) out[static_cast<std::size_t>(q)] = at(q);
  return out;
}

std::string PauliString::str() const {
  static const char* kPrefix[] = {"", "i", "-", "-i"};
  return kPrefix[phase_] + label();
}

PauliString PauliString::adjoint() const {
  // Pauli factors are Hermitian; only the scalar conjugates.
  return {n_, x_, z_, -phase_};
}

CMatrix PauliString::to_matrix() const {
  if (n_ > kDenseLimit)
    throw CapacityError("dense matrix limited to " + std::to_string(kDenseLimit) + " qubits");
  const std::size_t dim = std::size_t{1} << n_;
  const std::uint64_t xi = qubit_to_index_mask(x_, n_);
  const std::uint64_t zi = qubit_to_index_mask(z_, n_);
  const cplx base = i_pow(phase_ + y_count());
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t b = 0; b < dim; ++b) {
    const double s = (std::popcount(zi & b) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(b ^ xi), static_cast<Eigen::Index>(b)) = s * base;
  }
  return m;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  check_same(a, b);
  const std::uint64_t ax = a.x() & ~a.z(), ay = a.x() & a.z(), az = ~a.x() & a.z();
  const std::uint64_t bx = b.x() & ~b.z(), by = b.x() & b.z(), bz = ~b.x() & b.z();
  // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
  const int plus = std::popcount((ax & by) | (ay & bz) | (az & bx));
  const int minus = std::popcount((ay & bx) | (az & by) | (ax & bz));
  return {a.n(), a.x() ^ b.x(), a.z() ^ b.z(), a.phase() + b.phase() + plus - minus};
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same(a, b);
  return (std::popcount((a.x() & b.z()) ^ (a.z() & b.x())) & 1) == 0;
}

int weight(const PauliString& a) { return a.weight(); }
CMatrix to_matrix(const PauliString& a) { return a.to_matrix(); }

void PauliSum::add(const PauliString& p, double coeff) {
  if (n_ == 0 && terms_.empty()) n_ = p.n();
  if (p.n() != n_) throw DimensionError("term width differs from sum width");
  if (!std::isfinite(coeff)) throw ParameterError("non-finite coefficient");
  if (p.phase() & 1) throw ContractViolation("imaginary phase on " + p.str());
  if (p.phase() == 2) coeff = -coeff;
  const auto key = std::make_pair(p.x(), p.z());
  if (auto it = index_.find(key); it != index_.end()) {
    terms_[it->second].coeff += coeff;
    return;
  }
  index_.emplace(key, terms_.size());
  terms_.push_back({p.with_phase(0), coeff});
}

CMatrix PauliSum::to_matrix() const {
  if (n_ > kDenseLimit)
    throw CapacityError("dense matrix limited to " + std::to_string(kDenseLimit) + " qubits");
  const std::size_t dim = std::size_t{1} << n_;
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& t : terms_) {
    const std::uint64_t xi = qubit_to_index_mask(t.string.x(), n_);
    const std::uint64_t zi = qubit_to_index_mask(t.string.z(), n_);
    const cplx base = t.coeff * i_pow(t.string.y_count());
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double s = (std::popcount(zi & b) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(b ^ xi), static_cast<Eigen::Index>(b)) += s * base;
    }
  }
  return m;
}

}  // namespace sykq
