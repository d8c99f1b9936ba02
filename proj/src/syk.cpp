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

#include "sykq/syk.hpp"

#include <cmath>
#include <mutex>

#include "sykq/error.hpp"
#include "sykq/rng.hpp"

namespace sykq {

void SykParams::validate() const {
  if (N < 4 || N > 24 || N % 2 != 0)
    throw ParameterError("N must be even with 4 <= N <= 24, got " + std::to_string(N));
  if (q != 4) throw ParameterError("only q = 4 is implemented");
  if (!(J > 0.0) || !std::isfinite(J)) throw ParameterError("J must be positive");
}

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

SykInstance sample_couplings(const SykParams& params) {
  params.validate();
  const int N = params.N;
  const double sigma = params.J * std::sqrt(6.0 / (double(N) * N * N));
  Rng rng(params.seed);
  SykInstance inst{params, {}};
  inst.couplings.reserve(choose(N, 4));
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (int k = j + 1; k <= N; ++k)
        for (int l = k + 1; l <= N; ++l)
          inst.couplings.push_back({{i, j, k, l}, sigma * rng.gaussian()});
  return inst;
}

nlohmann::json SykInstance::to_json() const {
  nlohmann::json j;
  j["params"] = {{"N", params.N},
                 {"q", params.q},
                 {"J", params.J},
                 {"seed", params.seed},
                 {"unit_majorana", params.unit_majorana}};
  auto& list = j["couplings"] = nlohmann::json::array();
  for (const auto& c : couplings) list.push_back({{"idx", c.idx}, {"value", c.value}});
  return j;
}

SykInstance SykInstance::from_json(const nlohmann::json& j) {
  SykInstance inst;
  try {
    const auto& p = j.at("params");
    inst.params.N = p.at("N").get<int>();
    inst.params.q = p.value("q", 4);
    inst.params.J = p.value("J", 1.0);
    inst.params.seed = p.value("seed", std::uint64_t{0});
    inst.params.unit_majorana = p.value("unit_majorana", false);
    for (const auto& c : j.at("couplings"))
      inst.couplings.push_back({c.at("idx").get<std::array<int, 4>>(), c.at("value").get<double>()});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance json: ") + e.what());
  }
  inst.params.validate();
  if (inst.couplings.size() != choose(inst.params.N, 4))
    throw ParseError("instance json: wrong coupling count");
  for (const auto& c : inst.couplings) {
    if (!std::isfinite(c.value)) throw ParseError("instance json: non-finite coupling");
    if (c.idx[0] < 1 || c.idx[3] > inst.params.N || c.idx[0] >= c.idx[1] ||
        c.idx[1] >= c.idx[2] || c.idx[2] >= c.idx[3])
      throw ParseError("instance json: bad index tuple");
  }
  return inst;
}

MajoranaImage majorana_operator(int i, int N, bool unit_majorana) {
  if (N < 2 || N % 2 != 0) throw ParameterError("N must be even");
  if (i < 1 || i > N) throw ParameterError("Majorana index out of range");
  const int n = N / 2;
  const int k = (i + 1) / 2;  // qubit k-1 carries X or Y
  const std::uint64_t chain = (std::uint64_t{1} << (k - 1)) - 1;
  const std::uint64_t site = std::uint64_t{1} << (k - 1);
  const std::uint64_t z = chain | ((i % 2 == 0) ? site : 0);
  return {PauliString(n, site, z), unit_majorana ? 1.0 : 1.0 / std::sqrt(2.0)};
}

struct Hamiltonian::Cache {
  std::once_flag matrix_once, eig_once;
  CMatrix matrix;
  Eigen::VectorXd evals;
  CMatrix evecs;
};

Hamiltonian::Hamiltonian() : cache_(std::make_shared<Cache>()) {}

Hamiltonian::Hamiltonian(int n, PauliSum sum)
    : n_(n), sum_(std::move(sum)), cache_(std::make_shared<Cache>()) {
  if (sum_.n() != n && !sum_.empty()) throw DimensionError("sum width differs from n");
}

const CMatrix& Hamiltonian::matrix() const {
  if (n_ > kDenseLimit)
    throw CapacityError("dense Hamiltonian limited to " + std::to_string(kDenseLimit) + " qubits");
  std::call_once(cache_->matrix_once, [this] {
    cache_->matrix = sum_.empty()
                         ? CMatrix::Zero(Eigen::Index{1} << n_, Eigen::Index{1} << n_)
                         : sum_.to_matrix();
  });
  return cache_->matrix;
}

const Eigen::VectorXd& Hamiltonian::eigenvalues() const {
  const CMatrix& m = matrix();
  std::call_once(cache_->eig_once, [&] {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    cache_->evals = es.eigenvalues();
    cache_->evecs = es.eigenvectors();
  });
  return cache_->evals;
}

const CMatrix& Hamiltonian::eigenvectors() const {
  eigenvalues();
  return cache_->evecs;
}

Hamiltonian build_hamiltonian(const SykInstance& inst) {
  inst.params.validate();
  const int N = inst.params.N;
  const int n = N / 2;
  const bool unit = inst.params.unit_majorana;
  PauliSum sum(n);
  for (const auto& c : inst.couplings) {
    PauliString p(n);
    double scale = 1.0;
    for (int i : c.idx) {
      const auto m = majorana_operator(i, N, unit);
      p = multiply(p, m.string);
      scale *= m.scale;
    }
    sum.add(p, -c.value * scale);
  }
  return {n, std::move(sum)};
}

const CMatrix& exact_matrix(const Hamiltonian& h) { return h.matrix(); }

}  // namespace sykq
