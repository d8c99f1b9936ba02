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

#include "json.hpp"
#include "sykq/circuit.hpp"
#include "sykq/noise.hpp"
#include "sykq/rng.hpp"
#include "sykq/trotter.hpp"

namespace sykq {

/// (P1 (x) P2) G (P3 (x) P4) = sign * G, P1 and P3 acting on the gate's first
/// operand. Paulis are 'I', 'X', 'Y', 'Z'.
struct TwirlEntry {
  std::array<char, 4> ops{'I', 'I', 'I', 'I'};
  int sign = 1;

  std::string str() const;
  friend bool operator==(const TwirlEntry&, const TwirlEntry&) = default;
};

struct TwirlTable {
  GateKind gate = GateKind::CX;
  std::vector<TwirlEntry> entries;
};

/// Brute force over all 256 quadruples.
TwirlTable generate_twirl_table(GateKind gate, double tol = 1e-12);
/// Every entry holds to `tol`, entries are distinct, and there are 16.
bool verify_twirl_table(const TwirlTable& t, double tol = 1e-12);
/// Reference ECR conjugation table, column by column.
TwirlTable reference_ecr_table();

/// Conjugates every two-qubit gate by an entry drawn uniformly from the table
/// for its kind. Throws UnsupportedGateError when a kind has no table.
Circuit pauli_twirl(const Circuit& c, const std::vector<TwirlTable>& tables, Rng& rng);

/// (raw - 2^-n p) / (1 - p).
double invert_depolarizing(double raw, double p_hat, int n);

/// 2x2 column-stochastic confusion matrix for one qubit.
Eigen::Matrix2d confusion_matrix(const ReadoutError& r);
/// Per-qubit tensor-product inversion of a histogram; negative entries are
/// clipped and the result renormalized.
std::vector<double> readout_correct(const std::vector<std::uint64_t>& hist, int n,
                                    const std::vector<Eigen::Matrix2d>& confusion);

enum class Basis { CX, ECR };

struct MitigationOptions {
  int n_twirls = 75;
  std::uint64_t shots = 2048;
  bool self_mitigate = true;
  bool readout_correction = true;
  Basis basis = Basis::CX;
  int bootstrap = 400;
  std::uint64_t seed = 0;
};

struct MitigationEstimate {
  double raw = 0.0;
  double raw_stderr = 0.0;
  double mitigation_raw = 1.0;  // P0 of the forward-backward circuit
  double p_hat = 0.0;
  bool saturated = false;  // p_hat hit its clamp
  double mitigated = 0.0;
  double stderr = 0.0;

  nlohmann::json to_json() const;
};

/// Physics circuit: r steps forward. Mitigation circuit: r/2 forward then
/// r/2 inverted steps. Both twirled n_twirls times and run shot by shot.
MitigationEstimate self_mitigation(const TrotterPlan& plan, double t, int r, const NoiseModel& noise,
                                   const MitigationOptions& opts);
MitigationEstimate self_mitigation(const Hamiltonian& h, double t, int r, const NoiseModel& noise,
                                   std::uint64_t shots, int n_twirls);

/// Upper clamp on p_hat.
inline constexpr double kMaxDepolarizing = 1.0 - 1e-6;

}  // namespace sykq
