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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace sykq {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxQubits = 63;
/// Largest width for which dense 2^n x 2^n matrices are built.
inline constexpr int kDenseLimit = 12;

/// Reorders a qubit mask (qubit q at bit q) into a basis-index mask. Qubit 0
/// is the leftmost tensor factor, i.e. the most significant index bit.
inline std::uint64_t qubit_to_index_mask(std::uint64_t m, int n) {
  std::uint64_t r = 0;
  for (int q = 0; q < n; ++q)
    if ((m >> q) & 1U) r |= std::uint64_t{1} << (n - 1 - q);
  return r;
}

/// i^k for k taken mod 4.
cplx i_pow(int k);

/// n-qubit Pauli operator i^phase * P_0 (x) ... (x) P_{n-1}, stored as two
/// masks. (x,z) per qubit: (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n);
  PauliString(int n, std::uint64_t x, std::uint64_t z, int phase = 0);

  /// Accepts an optional phase prefix (+, -, i, +i, -i) followed by one of
  /// I, X, Y, Z or the double-struck one per qubit.
  static PauliString parse(std::string_view text);
  /// Single Pauli `op` ('X', 'Y', 'Z') on qubit q.
  static PauliString single(int n, int q, char op);

  int n() const { return n_; }
  std::uint64_t x() const { return x_; }
  std::uint64_t z() const { return z_; }
  int phase() const { return phase_; }
  cplx phase_value() const { return i_pow(phase_); }

  char at(int q) const;
  int weight() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  bool is_diagonal() const { return x_ == 0; }
  int y_count() const;

  /// Phase-free label, qubit 0 first ("ZXI").
  std::string label() const;
  /// label() with a phase prefix when the phase is not +1.
  std::string str() const;

  PauliString with_phase(int phase) const { return {n_, x_, z_, phase}; }
  PauliString negated() const { return {n_, x_, z_, phase_ + 2}; }
  PauliString adjoint() const;

  CMatrix to_matrix() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

PauliString multiply(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);
int weight(const PauliString& a);
CMatrix to_matrix(const PauliString& a);

struct WeightedPauli {
  PauliString string;
  double coeff = 0.0;
};

/// Real linear combination of phase-free Pauli strings.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n) : n_(n) {}

  /// Adds coeff * p. A real phase of p is folded into the coefficient; an
  /// imaginary one throws ContractViolation. Repeated strings accumulate.
  void add(const PauliString& p, double coeff);

  int n() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<WeightedPauli>& terms() const { return terms_; }
  const WeightedPauli& operator[](std::size_t i) const { return terms_[i]; }

  CMatrix to_matrix() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
      return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
    }
  };
  int n_ = 0;
  std::vector<WeightedPauli> terms_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::size_t, KeyHash> index_;
};

}  // namespace sykq
