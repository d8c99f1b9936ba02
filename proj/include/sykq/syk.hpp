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
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "sykq/pauli.hpp"

namespace sykq {

struct SykParams {
  int N = 6;
  int q = 4;
  double J = 1.0;
  std::uint64_t seed = 0;
  /// Scale Majoranas to square to 1 instead of 1/2 (coefficients x4).
  bool unit_majorana = false;

  void validate() const;
};

struct Coupling {
  std::array<int, 4> idx;  // 1-based, strictly increasing
  double value = 0.0;
};

struct SykInstance {
  SykParams params;
  std::vector<Coupling> couplings;  // lexicographic order of idx

  nlohmann::json to_json() const;
  static SykInstance from_json(const nlohmann::json& j);
};

/// Deterministic in params.seed; values are Gaussian with variance 3! J^2 / N^3.
SykInstance sample_couplings(const SykParams& params);

struct MajoranaImage {
  PauliString string;
  double scale;  // 1/sqrt(2), or 1 with unit normalization
};

/// Jordan-Wigner image of chi_i, 1 <= i <= N.
MajoranaImage majorana_operator(int i, int N, bool unit_majorana = false);

/// Qubitized Hamiltonian H = -sum_{i<j<k<l} J_ijkl chi_i chi_j chi_k chi_l.
/// Copies share one lazily built dense matrix and spectrum.
class Hamiltonian {
 public:
  Hamiltonian();
  Hamiltonian(int n, PauliSum sum);

  int n() const { return n_; }
  const PauliSum& sum() const { return sum_; }

  /// Dense matrix, built once (n <= kDenseLimit).
  const CMatrix& matrix() const;
  const Eigen::VectorXd& eigenvalues() const;
  const CMatrix& eigenvectors() const;

 private:
  struct Cache;
  int n_ = 0;
  PauliSum sum_;
  std::shared_ptr<Cache> cache_;
};

Hamiltonian build_hamiltonian(const SykInstance& inst);
const CMatrix& exact_matrix(const Hamiltonian& h);

/// Binomial coefficient C(n, k).
std::uint64_t choose(int n, int k);

}  // namespace sykq
