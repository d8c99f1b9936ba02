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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sykq/circuit.hpp"
#include "sykq/kernels.hpp"
#include "sykq/rng.hpp"
#include "sykq/statevector.hpp"

namespace sykq {

struct ReadoutError {
  double p10 = 0.0;  // P(read 1 | prepared 0)
  double p01 = 0.0;  // P(read 0 | prepared 1)
};

struct NoiseModel {
  double p2 = 0.0;  // two-qubit depolarizing probability per gate
  double p1 = 0.0;  // single-qubit depolarizing probability per gate; Rz included
  std::vector<ReadoutError> readout;  // empty = perfect readout
  std::uint64_t seed = 0;

  /// p2 = 15/16 makes each two-qubit channel completely depolarizing.
  static constexpr double kFullTwoQubit = 15.0 / 16.0;

  void validate() const;
  bool noiseless() const { return p2 == 0.0 && p1 == 0.0; }
};

/// One Monte-Carlo trajectory: after each two-qubit gate (SWAP three times),
/// with probability p2 one of the 15 non-identity two-qubit Paulis is applied.
StateVector apply_noisy_circuit(StateVector state, const Circuit& c, const NoiseModel& noise, Rng& rng);

struct ShotCounts {
  int n = 0;
  std::map<std::string, std::uint64_t> counts;  // bitstring, qubit 0 first
  std::uint64_t shots = 0;

  std::uint64_t count(const std::string& bits) const;
  double frequency(const std::string& bits) const;
  /// "bitstring count" per line, sorted by bitstring.
  std::string to_text() const;
  static ShotCounts from_histogram(const std::vector<std::uint64_t>& hist, int n);
};

/// Flips each bit of a basis index per the readout model.
std::uint64_t apply_readout(std::uint64_t index, int n, const std::vector<ReadoutError>& readout, Rng& rng);

/// Multinomial sampling of |amps|^2 followed by readout flips.
ShotCounts sample_measurements(const StateVector& state, std::uint64_t shots,
                               const std::vector<ReadoutError>& readout, Rng& rng);
std::vector<std::uint64_t> sample_histogram(const StateVector& state, std::uint64_t shots,
                                            const std::vector<ReadoutError>& readout, Rng& rng);

/// One trajectory per shot from |0...0>, shot s drawing from substream s of
/// `seed`; returns counts per basis index. The parallel and serial versions
/// produce identical histograms.
std::vector<std::uint64_t> noisy_shots(const Circuit& c, const NoiseModel& noise,
                                       std::uint64_t shots, std::uint64_t seed);
std::vector<std::uint64_t> noisy_shots_serial(const Circuit& c, const NoiseModel& noise,
                                              std::uint64_t shots, std::uint64_t seed);

}  // namespace sykq
